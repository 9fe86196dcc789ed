#include "farhi/constants.hpp"

#include <cmath>
#include <numbers>

#include "farhi/series.hpp"
#include "farhi/specfun.hpp"

namespace farhi::constants {

namespace {

constexpr double kPi = std::numbers::pi;

// gamma = H_N - log N - 1/(2N) + 1/(12 N^2) - 1/(120 N^4), N = 10^4.
// The remaining Euler-Maclaurin term is ~ 1/(252 N^6), far below 1e-15.
// H_N and the log N subtraction are carried in double-double precision;
// a plain Kahan sum minus std::log(N) would already lose ~1e-15 here.
double compute_gamma() {
  constexpr int kN = 10'000;
  // log(10^4) split into a double and its residual
  constexpr double kLogNHi = 9.2103403719761836;
  constexpr double kLogNLo = -8.6830248935289974e-16;

  double sum = 0.0;
  double err = 0.0;  // accumulated rounding corrections
  for (int n = kN; n >= 1; --n) {
    const double r = 1.0 / n;
    err += std::fma(r, -static_cast<double>(n), 1.0) * r;  // 1/n residual
    const double t = sum + r;
    // two-sum error term (|sum| >= |r| does not hold early, use full form)
    const double bv = t - sum;
    err += (sum - (t - bv)) + (r - bv);
    sum = t;
  }
  const double N = kN;
  return (sum - kLogNHi) +
         (err - kLogNLo - 1.0 / (2.0 * N) + 1.0 / (12.0 * N * N) -
          1.0 / (120.0 * N * N * N * N));
}

ConstantsTable compute_table() {
  ConstantsTable t{};
  t.pi = kPi;
  t.gamma = compute_gamma();
  t.log_two_pi = std::log(2.0 * kPi);
  t.zeta_prime_2 = -series::sum_logn_over_n2(1e-14).value;
  t.log_glaisher =
      (-6.0 * t.zeta_prime_2 / (kPi * kPi) + t.gamma + t.log_two_pi) / 12.0;
  t.ci_two_pi = specfun::cin_cos(2.0 * kPi);
  t.eta_closed = (t.gamma + t.log_two_pi) / kPi;
  return t;
}

}  // namespace

const ConstantsTable& table() {
  static const ConstantsTable t = compute_table();
  return t;
}

double euler_gamma() { return table().gamma; }

double zeta_prime_2() { return table().zeta_prime_2; }

double log_glaisher() { return table().log_glaisher; }

double eta_closed_form() { return table().eta_closed; }

}  // namespace farhi::constants
