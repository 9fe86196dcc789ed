#ifndef FARHI_QUADRATURE_HPP
#define FARHI_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace farhi::quadrature {

struct QuadConfig {
  double abs_tol = 1e-12;
  int max_levels = 12;
  std::int64_t max_evals = 1'000'000;
};

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;  // absolute, difference of last two levels
  std::int64_t evals = 0;
};

enum class QuadErrorKind { NoConvergence, NonFinite };

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(QuadErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  QuadErrorKind kind() const noexcept { return kind_; }

 private:
  QuadErrorKind kind_;
};

using Integrand = std::function<double(double)>;

// Tanh-sinh (double-exponential) quadrature over a finite interval (a, b).
// Handles integrable endpoint singularities of log type; the integrand is
// never evaluated exactly at a or b.
QuadResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadConfig& cfg = {});

// Exp-sinh quadrature over (0, inf). The integrand must decay
// exponentially or at least like t^-3 at infinity.
QuadResult integrate_semi_infinite(const Integrand& f,
                                   const QuadConfig& cfg = {});

// eta = 2 int_0^1 log Gamma(x) sin(2 pi x) dx, evaluated directly.
double eta_by_direct_quadrature(const QuadConfig& cfg = {});

// eta via the Malmsten route:
// 2 int_0^inf [4pi^2(1-e^-t) - t^2 e^-t] / (2 pi t (4pi^2 + t^2)) dt.
double eta_by_malmsten(const QuadConfig& cfg = {});

// The Malmsten-route integrand; the removable singularity at t = 0 is
// patched with its analytic limit 1/(2 pi) for t < 1e-8.
double malmsten_integrand(double t);

namespace detail {
// Fault-injection hook for the test suite: the bias is added to the value
// of every quadrature result. Must be 0 in normal operation.
void set_result_bias(double bias);
// Running count of integrand evaluations across all calls.
std::int64_t eval_count();
// Successive tanh-sinh level estimates for (a, b); used by the
// convergence-order tests.
std::vector<double> tanh_sinh_levels(const Integrand& f, double a, double b,
                                     int levels);
}  // namespace detail

}  // namespace farhi::quadrature

#endif
