#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "farhi/constants.hpp"
#include "farhi/series.hpp"
#include "farhi/specfun.hpp"
#include "oracles.hpp"

using namespace farhi;
using oracles::kPi;

namespace {

// Closed form for S(x) solved from the log Gamma identity; kummer_tail
// itself never uses this route, so it is a valid oracle.
double kummer_closed_form(double x) {
  const auto& c = constants::table();
  return kPi * (specfun::log_gamma(x) - 0.5 * std::log(kPi) -
                kPi * c.eta_closed * (0.5 - x) +
                0.5 * specfun::log_sin_pi(x));
}

}  // namespace

TEST_CASE("kummer_tail values") {
  const auto at_half = series::kummer_tail(0.5, 1e-8);
  CHECK(std::abs(at_half.value) <= 1e-8);
  CHECK(at_half.method == series::Method::CesaroAveraged);

  const auto at_quarter = series::kummer_tail(0.25, 1e-6);
  CHECK(std::abs(at_quarter.value - oracles::kKummerQuarter) <= 1e-6);
  CHECK(std::abs(at_quarter.value - kummer_closed_form(0.25)) <= 1e-6);
  CHECK(at_quarter.terms_used >= 1);
}

TEST_CASE("kummer_tail antisymmetry") {
  for (double x : {0.1, 0.3, 0.45}) {
    const double tol = 1e-6;
    const double a = series::kummer_tail(x, tol).value;
    const double b = series::kummer_tail(1.0 - x, tol).value;
    CHECK(std::abs(a + b) <= 2.0 * tol);
  }
}

TEST_CASE("kummer_tail preconditions") {
  CHECK_THROWS_AS(series::kummer_tail(0.0, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(series::kummer_tail(1.0, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(series::kummer_tail(0.25, 1e-9), std::invalid_argument);
  // impossible budget -> NoConvergence
  CHECK_THROWS_AS(series::kummer_tail(0.1, 1e-8, 1000), series::SeriesError);
}

TEST_CASE("raw Kummer partial sums oscillate while averaged ones settle") {
  const double x = 0.25;
  const std::complex<double> rot(std::cos(2.0 * kPi * x),
                                 std::sin(2.0 * kPi * x));
  std::complex<double> z(1.0, 0.0);
  double partial = 0.0;
  double mean_acc = 0.0;
  std::vector<double> raw, averaged;
  const long N = 100'000;
  for (long n = 1; n <= N; ++n) {
    z *= rot;
    if (n > 1) partial += std::log(static_cast<double>(n)) / n * z.imag();
    mean_acc += partial;
    if (n > N - 100) {
      raw.push_back(partial);
      averaged.push_back(mean_acc / n);
    }
  }
  auto variance = [](const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= v.size();
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    return var / v.size();
  };
  CHECK(variance(averaged) <= 1e-6 * variance(raw));
}

TEST_CASE("sum log n / n^2") {
  const auto r = series::sum_logn_over_n2();
  CHECK(std::abs(r.value - (-oracles::kZetaPrime2)) <= 1e-14);
  CHECK(std::abs(r.value - (-oracles::zeta_prime_2_brute())) <= 1e-10);
  CHECK(r.method == series::Method::DirectPlusEMTail);
  CHECK(r.value > 0.0);  // all terms nonnegative

  // doubling the direct-summation range changes nothing beyond 1e-14
  const double n1 = series::detail::logn_over_n2_direct_plus_tail(100'000);
  const double n2 = series::detail::logn_over_n2_direct_plus_tail(200'000);
  CHECK(std::abs(n1 - n2) <= 1e-14);
}

TEST_CASE("alternating sum via acceleration") {
  const auto r = series::sum_alt_logn_over_n2();
  CHECK(r.method == series::Method::AlternatingAccel);
  CHECK(std::abs(r.value - oracles::kAltSum) <= 1e-13);
  CHECK(std::abs(r.value - oracles::alt_logn_over_n2_brute()) <= 1e-10);

  // both displayed closed forms agree with it
  const auto& c = constants::table();
  const double form1 =
      (kPi * kPi * std::log(2.0) + 6.0 * c.zeta_prime_2) / 12.0;
  const double form2 =
      -kPi * kPi / 12.0 *
      (12.0 * c.log_glaisher - c.gamma - 2.0 * std::log(2.0) -
       std::log(kPi));
  CHECK(std::abs(r.value - form1) <= 1e-12);
  CHECK(std::abs(r.value - form2) <= 1e-12);
}

TEST_CASE("combined sum and the half-interval closure") {
  const double combined = series::sum_logn_over_n2().value -
                          series::sum_alt_logn_over_n2().value;
  CHECK(std::abs(combined - oracles::kCombinedSum) <= 1e-12);

  const auto& c = constants::table();
  const double closed =
      -kPi * kPi / 12.0 *
      (3.0 * c.gamma + 4.0 * std::log(2.0) - 36.0 * c.log_glaisher +
       3.0 * std::log(kPi));
  CHECK(std::abs(combined - closed) <= 1e-12);

  // closure of the half-interval integral of log Gamma
  const double reconstructed =
      std::log(2.0) / 4.0 + kPi * c.eta_closed / 8.0 + std::log(kPi) / 4.0 +
      combined / (2.0 * kPi * kPi);
  CHECK(std::abs(reconstructed - oracles::kHalfLogGammaInt) <= 1e-10);
}

TEST_CASE("monotone partial sums of the nonnegative series") {
  double partial = 0.0;
  for (long n = 2; n <= 2000; ++n) {
    const double dn = static_cast<double>(n);
    const double next = partial + std::log(dn) / (dn * dn);
    CHECK(next >= partial);
    partial = next;
  }
  CHECK(partial < series::sum_logn_over_n2().value);
}
