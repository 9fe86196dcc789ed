#include "farhi/series.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>

namespace farhi::series {

namespace {

constexpr double kPi = std::numbers::pi;

std::atomic<std::int64_t> g_terms{0};

void charge(std::int64_t n) {
  g_terms.fetch_add(n, std::memory_order_relaxed);
}

struct Kahan {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

SeriesResult kummer_tail(double x, double target_tol, std::int64_t max_terms) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::invalid_argument("kummer_tail: x must lie in (0, 1)");
  }
  if (!(target_tol >= 1e-8)) {
    throw std::invalid_argument(
        "kummer_tail: conditional convergence caps accuracy at 1e-8");
  }

  // Checkpoints are aligned to the period length of sin(2 pi n x) in n so
  // that the Cesaro means average over whole oscillation periods.
  const double margin = std::min(x, 1.0 - x);
  const std::int64_t period = std::clamp<std::int64_t>(
      std::llround(1.0 / margin), 1, 10'000);
  std::int64_t checkpoint =
      std::max<std::int64_t>(period, period * ((2500 + period - 1) / period));

  const std::complex<double> rot(std::cos(2.0 * kPi * x),
                                 std::sin(2.0 * kPi * x));
  std::complex<double> z(1.0, 0.0);
  Kahan partial;   // s_n = sum_{k<=n} log(k) sin(2 pi k x)/k
  Kahan mean_acc;  // sum of partial sums, for the Cesaro mean
  double prev_sigma = 0.0;
  double prev_extrap = 0.0;
  bool have_sigma = false;
  bool have_extrap = false;

  std::int64_t n = 0;
  while (n < max_terms) {
    ++n;
    z *= rot;
    if ((n & 0xffff) == 0) z /= std::abs(z);  // rotation drift control
    if (n > 1) partial.add(std::log(static_cast<double>(n)) / n * z.imag());
    mean_acc.add(partial.sum);
    if (n == checkpoint) {
      const double sigma = mean_acc.sum / static_cast<double>(n);
      if (have_sigma) {
        // the Cesaro mean has a clean c/N drift; Richardson kills it
        const double extrap = 2.0 * sigma - prev_sigma;
        if (have_extrap && std::abs(extrap - prev_extrap) <= target_tol) {
          charge(n);
          return {extrap, n, Method::CesaroAveraged};
        }
        prev_extrap = extrap;
        have_extrap = true;
      }
      prev_sigma = sigma;
      have_sigma = true;
      checkpoint *= 2;
    }
  }
  charge(n);
  throw SeriesError("kummer_tail: averaging stalled before max_terms");
}

SeriesResult sum_logn_over_n2(double target_tol) {
  if (!(target_tol >= 1e-14)) {
    throw std::invalid_argument("sum_logn_over_n2: target_tol must be >= 1e-14");
  }
  constexpr std::int64_t kDirect = 100'000;
  const double value = detail::logn_over_n2_direct_plus_tail(kDirect);
  return {value, kDirect, Method::DirectPlusEMTail};
}

SeriesResult sum_alt_logn_over_n2(double target_tol) {
  if (!(target_tol >= 1e-13)) {
    throw std::invalid_argument(
        "sum_alt_logn_over_n2: target_tol must be >= 1e-13");
  }
  // Cohen-Rodriguez Villegas-Zagier acceleration, order 32.
  // sum_{n>=1} (-1)^n log(n)/n^2 = -sum_{k>=0} (-1)^k a_k,
  // a_k = log(k+1)/(k+1)^2.
  constexpr int kOrder = 32;
  double d = std::pow(3.0 + std::sqrt(8.0), kOrder);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (int k = 0; k < kOrder; ++k) {
    c = b - c;
    const double ak = std::log(static_cast<double>(k + 1)) /
                      (static_cast<double>(k + 1) * (k + 1));
    s += c * ak;
    b *= (k + kOrder) * (k - kOrder) / ((k + 0.5) * (k + 1.0));
  }
  charge(kOrder);
  return {-s / d, kOrder, Method::AlternatingAccel};
}

namespace detail {

double logn_over_n2_direct_plus_tail(std::int64_t n_direct) {
  Kahan acc;
  for (std::int64_t n = 2; n <= n_direct; ++n) {
    const double dn = static_cast<double>(n);
    acc.add(std::log(dn) / (dn * dn));
  }
  charge(n_direct);
  // Euler-Maclaurin tail for f(t) = log(t)/t^2 from N:
  //   sum_{n>N} f(n) = int_N^inf f + f(N)/2 ... expressed from N itself:
  //   sum_{n>=N} f(n) = int_N^inf f + f(N)/2 - f'(N)/12 + f'''(N)/720
  // so subtract the already-counted f(N).
  const double N = static_cast<double>(n_direct);
  const double lg = std::log(N);
  const double f = lg / (N * N);
  const double fp = (1.0 - 2.0 * lg) / (N * N * N);
  const double fppp = (26.0 - 24.0 * lg) / std::pow(N, 5);
  const double tail = (lg + 1.0) / N + f / 2.0 - fp / 12.0 + fppp / 720.0 - f;
  return acc.sum + tail;
}

std::int64_t term_count() { return g_terms.load(std::memory_order_relaxed); }

}  // namespace detail

}  // namespace farhi::series
