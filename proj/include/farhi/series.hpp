#ifndef FARHI_SERIES_HPP
#define FARHI_SERIES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace farhi::series {

enum class Method { DirectPlusEMTail, CesaroAveraged, AlternatingAccel };

struct SeriesResult {
  double value = 0.0;
  std::int64_t terms_used = 0;
  Method method = Method::DirectPlusEMTail;
};

class SeriesError : public std::runtime_error {
 public:
  explicit SeriesError(const std::string& what) : std::runtime_error(what) {}
};

// S(x) = sum_{n>=1} log(n) sin(2 pi n x)/n for x in (0,1), summed by
// Cesaro averaging of period-aligned partial sums with Richardson
// extrapolation of the means. Conditional convergence caps the
// achievable accuracy; target_tol must be >= 1e-8.
SeriesResult kummer_tail(double x, double target_tol,
                         std::int64_t max_terms = 2'000'000);

// sum_{n>=1} log(n)/n^2 = -zeta'(2): direct sum plus Euler-Maclaurin tail.
SeriesResult sum_logn_over_n2(double target_tol = 1e-14);

// sum_{n>=1} (-1)^n log(n)/n^2 via alternating-series acceleration
// (Cohen-Rodriguez Villegas-Zagier, 32 terms).
SeriesResult sum_alt_logn_over_n2(double target_tol = 1e-13);

namespace detail {
// Direct sum of log(n)/n^2 to N plus the Euler-Maclaurin tail through the
// B4 derivative term. Exposed so tests can double N.
double logn_over_n2_direct_plus_tail(std::int64_t n_direct);
// Running count of series terms consumed across all calls.
std::int64_t term_count();
}  // namespace detail

}  // namespace farhi::series

#endif
