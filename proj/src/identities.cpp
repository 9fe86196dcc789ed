#include "farhi/identities.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>

#include "farhi/constants.hpp"
#include "farhi/quadrature.hpp"
#include "farhi/series.hpp"
#include "farhi/specfun.hpp"

namespace farhi::identities {

namespace {

constexpr double kPi = std::numbers::pi;

// Fixed evaluation grid for the pointwise identities; fixed points keep
// the CI output reproducible.
const std::vector<double> kPointGrid = {0.1, 0.25, 0.4, 0.6, 0.75, 0.9};

constexpr double kKummerTol = 1e-7;

double quad_finite(const quadrature::Integrand& f, double a, double b) {
  return quadrature::integrate_finite(f, a, b).value;
}

double quad_semi_inf(const quadrature::Integrand& f) {
  return quadrature::integrate_semi_infinite(f).value;
}

// Integrand of the Malmsten representation for log Gamma(z+1):
// [z - (1 - e^{-zt})/(1 - e^{-t})] e^{-t}/t.
double malmsten_z_integrand(double z, double t) {
  if (t < 1e-6) {
    // bracket ~ z(z-1) t/2, so the integrand tends to z(z-1)/2
    return z * (z - 1.0) / 2.0 * (1.0 - t);
  }
  const double ratio = std::expm1(-z * t) / std::expm1(-t);
  return (z - ratio) * std::exp(-t) / t;
}

// Integrand of the shifted representation for log Gamma(x):
// [e^{-(x-1)t} - (x-1)(e^{-t}-1) - 1] / (t (e^t - 1)).
double malmsten_shifted_integrand(double x, double t) {
  const double a = x - 1.0;
  if (t < 1e-8) return a * (a - 1.0) / 2.0;  // removable singularity
  if (t < 0.1) {
    // numerator = sum_{k>=2} (-1)^k (a^k - a) t^k / k!
    double num = 0.0;
    double tk = 1.0;      // t^k / k! running
    double ak = a;        // a^k running
    double sign = -1.0;   // (-1)^k, starting at k = 2
    for (int k = 2; k <= 12; ++k) {
      tk = (k == 2) ? t * t / 2.0 : tk * t / k;
      ak *= a;
      sign = -sign;
      num += sign * (ak - a) * tk;
    }
    return num / (t * std::expm1(t));
  }
  if (t > 500.0) {
    // only the e^{-(x-1)t}/(t e^t) = e^{-x t}/t piece survives
    return std::exp(-x * t) / t;
  }
  const double num = std::exp(-a * t) - a * std::expm1(-t) - 1.0;
  return num / (t * std::expm1(t));
}

std::vector<IdentityRecord> build_registry() {
  const auto& c = constants::table();
  const double eta = c.eta_closed;
  const double log2 = std::log(2.0);
  const double logpi = std::log(kPi);

  std::vector<IdentityRecord> r;

  r.push_back({IdentityId::EQ1_POINTWISE,
               "log Gamma(x) = log(pi)/2 + pi eta (1/2 - x) - log(sin pi x)/2 "
               "+ S(x)/pi on the fixed x grid",
               "Eq. (1)", 1e-6, kPointGrid,
               [](double x) { return specfun::log_gamma(x); },
               [=](double x) {
                 return logpi / 2.0 + kPi * eta * (0.5 - x) -
                        specfun::log_sin_pi(x) / 2.0 +
                        series::kummer_tail(x, kKummerTol).value / kPi;
               }});

  r.push_back({IdentityId::EQ2_ETA_DEF,
               "eta = 2 int_0^1 log Gamma(x) sin(2 pi x) dx",
               "Eq. (2)", 1e-10, {},
               [](double) { return quadrature::eta_by_direct_quadrature(); },
               [=](double) { return eta; }});

  r.push_back({IdentityId::EQ3_KUMMER_POINTWISE,
               "Kummer series for log Gamma(x) on the fixed x grid",
               "Eq. (3)", 1e-6, kPointGrid,
               [](double x) { return specfun::log_gamma(x); },
               [=](double x) {
                 return (0.5 - x) * (c.gamma + log2) + (1.0 - x) * logpi -
                        specfun::log_sin_pi(x) / 2.0 +
                        series::kummer_tail(x, kKummerTol).value / kPi;
               }});

  r.push_back({IdentityId::EQ4_CLOSED_FORM,
               "eta (direct quadrature) = (gamma + log 2pi)/pi",
               "Eq. (4)", 1e-10, {},
               [](double) { return quadrature::eta_by_direct_quadrature(); },
               [=](double) { return (c.gamma + c.log_two_pi) / kPi; }});

  r.push_back({IdentityId::EQ5_LINEAR,
               "int_0^1/2 (1/2 - x) dx = 1/8",
               "Eq. (5)", 1e-10, {},
               [](double) {
                 return quad_finite([](double x) { return 0.5 - x; }, 0.0, 0.5);
               },
               [](double) { return 0.125; }});

  r.push_back({IdentityId::EQ6_LOGSIN,
               "-1/2 int_0^1/2 log sin(pi x) dx = log(2)/4",
               "Eq. (6)", 1e-10, {},
               [](double) {
                 return -0.5 * quad_finite(
                                   [](double x) {
                                     return specfun::log_sin_pi(x);
                                   },
                                   0.0, 0.5);
               },
               [=](double) { return log2 / 4.0; }});

  r.push_back({IdentityId::EQ7_ORTHOG,
               "int_0^1/2 sin(2 pi n x) dx = (1 - (-1)^n)/(2 pi n), "
               "n = 1..5",
               "Eq. (7)", 1e-10, {1, 2, 3, 4, 5},
               [](double n) {
                 return quad_finite(
                     [n](double x) { return std::sin(2.0 * kPi * n * x); },
                     0.0, 0.5);
               },
               [](double n) {
                 const double sgn = (std::llround(n) % 2 == 0) ? 1.0 : -1.0;
                 return (1.0 - sgn) / (2.0 * kPi * n);
               }});

  r.push_back({IdentityId::EQ8_HALF_INT,
               "int_0^1/2 log Gamma = log(2)/4 + pi eta/8 + log(pi)/4 + "
               "combined sum/(2 pi^2)",
               "Eq. (8)", 1e-10, {},
               [](double) {
                 return quad_finite(
                     [](double x) { return specfun::log_gamma(x); }, 0.0, 0.5);
               },
               [=](double) {
                 const double combined =
                     series::sum_logn_over_n2().value -
                     series::sum_alt_logn_over_n2().value;
                 return log2 / 4.0 + kPi * eta / 8.0 + logpi / 4.0 +
                        combined / (2.0 * kPi * kPi);
               }});

  r.push_back({IdentityId::EQ9_GK_LIMIT,
               "H(n)/(n^{n^2/2+n/2+1/12} e^{-n^2/4}) -> A at n = 2000",
               "Eq. (9)", 5e-4, {},
               [](double) {
                 const double n = 2000.0;
                 const double p = n * n / 2.0 + n / 2.0 + 1.0 / 12.0;
                 const double log_ratio = specfun::log_hyperfactorial(2000) -
                                          p * std::log(n) + n * n / 4.0;
                 return std::exp(log_ratio);
               },
               [=](double) { return std::exp(c.log_glaisher); }});

  r.push_back({IdentityId::EQ10_GLAISHER_INT,
               "int_0^1/2 log Gamma = 5 log(2)/24 + log(pi)/4 + 3 log(A)/2",
               "Eq. (10)", 1e-10, {},
               [](double) {
                 return quad_finite(
                     [](double x) { return specfun::log_gamma(x); }, 0.0, 0.5);
               },
               [=](double) {
                 return 5.0 * log2 / 24.0 + logpi / 4.0 +
                        1.5 * c.log_glaisher;
               }});

  r.push_back({IdentityId::EQ11_ETA_VIA_A,
               "eta = 12 log(A)/pi - log(2)/(3 pi) - 4/pi^3 "
               "sum [1-(-1)^n] log(n)/n^2",
               "Eq. (11)", 1e-9, {},
               [=](double) {
                 const double combined =
                     series::sum_logn_over_n2().value -
                     series::sum_alt_logn_over_n2().value;
                 return 12.0 * c.log_glaisher / kPi - log2 / (3.0 * kPi) -
                        4.0 / (kPi * kPi * kPi) * combined;
               },
               [=](double) { return eta; }});

  r.push_back({IdentityId::EQ12_ZETAPRIME,
               "sum log(n)/n^2 = -zeta'(2) = pi^2/6 [12 log A - gamma - "
               "log 2pi]",
               "Eq. (12)", 1e-12, {},
               [](double) { return series::sum_logn_over_n2().value; },
               [=](double) {
                 return kPi * kPi / 6.0 *
                        (12.0 * c.log_glaisher - c.gamma - c.log_two_pi);
               }});

  r.push_back({IdentityId::EQ13_ALT_SUM,
               "sum (-1)^n log(n)/n^2 = [pi^2 log 2 + 6 zeta'(2)]/12 "
               "(both displayed forms verified numerically)",
               "Eq. (13)", 1e-12, {},
               [](double) { return series::sum_alt_logn_over_n2().value; },
               [=](double) {
                 return (kPi * kPi * log2 + 6.0 * c.zeta_prime_2) / 12.0;
               }});

  r.push_back({IdentityId::EQ14_COMBINED_SUM,
               "sum [1-(-1)^n] log(n)/n^2 = -pi^2/12 (3 gamma + 4 log 2 - "
               "36 log A + 3 log pi) (sign verified numerically)",
               "Eq. (14)", 1e-12, {},
               [](double) {
                 return series::sum_logn_over_n2().value -
                        series::sum_alt_logn_over_n2().value;
               },
               [=](double) {
                 return -kPi * kPi / 12.0 *
                        (3.0 * c.gamma + 4.0 * log2 -
                         36.0 * c.log_glaisher + 3.0 * logpi);
               }});

  r.push_back({IdentityId::EQ16_MALMSTEN,
               "Malmsten integral for log Gamma(z+1), z in {0.5, 1, 2.5}",
               "Eq. (16)", 1e-10, {0.5, 1.0, 2.5},
               [](double z) {
                 return quad_semi_inf(
                     [z](double t) { return malmsten_z_integrand(z, t); });
               },
               [](double z) { return specfun::log_gamma(z + 1.0); }});

  r.push_back({IdentityId::EQ17_SHIFTED,
               "shifted Malmsten integral for log Gamma(x), "
               "x in {0.25, 0.5, 0.75}",
               "Eq. (17)", 1e-10, {0.25, 0.5, 0.75},
               [](double x) {
                 return quad_semi_inf([x](double t) {
                   return malmsten_shifted_integrand(x, t);
                 });
               },
               [](double x) { return specfun::log_gamma(x); }});

  r.push_back({IdentityId::EQ18_I1,
               "I1(t) = int_0^1 e^{-(x-1)t} sin(2 pi x) dx = "
               "2 pi (e^t - 1)/(4 pi^2 + t^2), t in {0.5, 1, 5} "
               "(normalization of the displayed form verified numerically)",
               "Eq. (18)", 1e-12, {0.5, 1.0, 5.0},
               [](double t) {
                 return quad_finite(
                     [t](double x) {
                       return std::exp(-(x - 1.0) * t) *
                              std::sin(2.0 * kPi * x);
                     },
                     0.0, 1.0);
               },
               [](double t) {
                 return 2.0 * kPi * std::expm1(t) /
                        (4.0 * kPi * kPi + t * t);
               }});

  r.push_back({IdentityId::EQ19_I2,
               "I2 = int_0^1 (x-1) sin(2 pi x) dx = -1/(2 pi)",
               "Eq. (19)", 1e-12, {},
               [](double) {
                 return quad_finite(
                     [](double x) {
                       return (x - 1.0) * std::sin(2.0 * kPi * x);
                     },
                     0.0, 1.0);
               },
               [](double) { return -1.0 / (2.0 * kPi); }});

  r.push_back({IdentityId::EQ20_I3,
               "I3 = int_0^1 (x-2) sin(2 pi x) dx = -1/(2 pi)",
               "Eq. (20)", 1e-12, {},
               [](double) {
                 return quad_finite(
                     [](double x) {
                       return (x - 2.0) * std::sin(2.0 * kPi * x);
                     },
                     0.0, 1.0);
               },
               [](double) { return -1.0 / (2.0 * kPi); }});

  r.push_back({IdentityId::EQ21_COMBINED,
               "int_0^inf [4pi^2(1-e^-t) - t^2 e^-t]/(2 pi t (4pi^2+t^2)) dt "
               "= eta/2",
               "Eq. (21)", 1e-10, {},
               [](double) {
                 return quad_semi_inf(quadrature::malmsten_integrand);
               },
               [=](double) {
                 return (c.gamma + c.log_two_pi) / (2.0 * kPi);
               }});

  r.push_back({IdentityId::EQ22_CI_PART,
               "int_0^inf (1-e^-t)/(2 pi t (4pi^2+t^2)) dt = "
               "(gamma - Ci(2pi) + log 2pi)/(8 pi^3)",
               "Eq. (22)", 1e-11, {},
               [](double) {
                 return quad_semi_inf([](double t) {
                   return -std::expm1(-t) /
                          (2.0 * kPi * t * (4.0 * kPi * kPi + t * t));
                 });
               },
               [=](double) {
                 return (c.gamma - c.ci_two_pi + c.log_two_pi) /
                        (8.0 * kPi * kPi * kPi);
               }});

  r.push_back({IdentityId::EQ23_CI_PART2,
               "int_0^inf (-t^2 e^-t)/(2 pi t (4pi^2+t^2)) dt = Ci(2pi)/(2 pi)",
               "Eq. (23)", 1e-11, {},
               [](double) {
                 return quad_semi_inf([](double t) {
                   return -t * std::exp(-t) /
                          (2.0 * kPi * (4.0 * kPi * kPi + t * t));
                 });
               },
               [=](double) { return c.ci_two_pi / (2.0 * kPi); }});

  r.push_back({IdentityId::EQ26_ETA_MALMSTEN,
               "eta (Malmsten route) = (gamma + log 2pi)/pi",
               "Eq. (26)", 1e-10, {},
               [](double) { return quadrature::eta_by_malmsten(); },
               [=](double) { return (c.gamma + c.log_two_pi) / kPi; }});

  r.push_back({IdentityId::LIMA_DIGAMMA,
               "int_0^1 psi(x) sin^2(pi x) dx = -pi eta/2 (by parts)",
               "Conclusion", 1e-9, {},
               [](double) {
                 return quad_finite(
                     [](double x) {
                       const double s = std::sin(kPi * x);
                       return specfun::digamma(x) * s * s;
                     },
                     0.0, 1.0);
               },
               [=](double) { return -kPi * eta / 2.0; }});

  return r;
}

}  // namespace

std::string to_string(IdentityId id) {
  switch (id) {
    case IdentityId::EQ1_POINTWISE: return "EQ1_POINTWISE";
    case IdentityId::EQ2_ETA_DEF: return "EQ2_ETA_DEF";
    case IdentityId::EQ3_KUMMER_POINTWISE: return "EQ3_KUMMER_POINTWISE";
    case IdentityId::EQ4_CLOSED_FORM: return "EQ4_CLOSED_FORM";
    case IdentityId::EQ5_LINEAR: return "EQ5_LINEAR";
    case IdentityId::EQ6_LOGSIN: return "EQ6_LOGSIN";
    case IdentityId::EQ7_ORTHOG: return "EQ7_ORTHOG";
    case IdentityId::EQ8_HALF_INT: return "EQ8_HALF_INT";
    case IdentityId::EQ9_GK_LIMIT: return "EQ9_GK_LIMIT";
    case IdentityId::EQ10_GLAISHER_INT: return "EQ10_GLAISHER_INT";
    case IdentityId::EQ11_ETA_VIA_A: return "EQ11_ETA_VIA_A";
    case IdentityId::EQ12_ZETAPRIME: return "EQ12_ZETAPRIME";
    case IdentityId::EQ13_ALT_SUM: return "EQ13_ALT_SUM";
    case IdentityId::EQ14_COMBINED_SUM: return "EQ14_COMBINED_SUM";
    case IdentityId::EQ16_MALMSTEN: return "EQ16_MALMSTEN";
    case IdentityId::EQ17_SHIFTED: return "EQ17_SHIFTED";
    case IdentityId::EQ18_I1: return "EQ18_I1";
    case IdentityId::EQ19_I2: return "EQ19_I2";
    case IdentityId::EQ20_I3: return "EQ20_I3";
    case IdentityId::EQ21_COMBINED: return "EQ21_COMBINED";
    case IdentityId::EQ22_CI_PART: return "EQ22_CI_PART";
    case IdentityId::EQ23_CI_PART2: return "EQ23_CI_PART2";
    case IdentityId::EQ26_ETA_MALMSTEN: return "EQ26_ETA_MALMSTEN";
    case IdentityId::LIMA_DIGAMMA: return "LIMA_DIGAMMA";
  }
  return "UNKNOWN";
}

const std::vector<IdentityRecord>& registry() {
  static const std::vector<IdentityRecord> r = build_registry();
  return r;
}

const IdentityRecord* find(std::string_view name) {
  for (const auto& rec : registry()) {
    if (to_string(rec.id) == name) return &rec;
  }
  return nullptr;
}

CheckResult run_check(const IdentityRecord& rec, double tol_scale) {
  CheckResult res;
  res.id = rec.id;
  res.tol = rec.tol * tol_scale;

  const auto evals_before =
      quadrature::detail::eval_count() + series::detail::term_count();
  const auto t0 = std::chrono::steady_clock::now();

  const std::vector<double>& params =
      rec.params.empty() ? std::vector<double>{0.0} : rec.params;
  try {
    double worst = -1.0;
    for (double p : params) {
      const double lhs = rec.lhs(p);
      const double rhs = rec.rhs(p);
      const double ae = std::abs(lhs - rhs);
      if (!(ae <= worst)) {  // also captures NaN
        worst = ae;
        res.lhs_value = lhs;
        res.rhs_value = rhs;
        res.abs_err = ae;
      }
    }
    res.rel_err = res.abs_err / std::max({std::abs(res.lhs_value),
                                          std::abs(res.rhs_value), 1.0});
    res.pass = res.abs_err <= res.tol;
  } catch (const std::exception& e) {
    res.lhs_value = res.rhs_value = std::numeric_limits<double>::quiet_NaN();
    res.abs_err = res.rel_err = std::numeric_limits<double>::quiet_NaN();
    res.pass = false;
    res.diagnostic = e.what();
  }

  const auto t1 = std::chrono::steady_clock::now();
  res.runtime_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  res.evals =
      quadrature::detail::eval_count() + series::detail::term_count() -
      evals_before;
  return res;
}

CheckResult run_check(IdentityId id, double tol_scale) {
  for (const auto& rec : registry()) {
    if (rec.id == id) return run_check(rec, tol_scale);
  }
  throw std::invalid_argument("run_check: identity not registered");
}

std::vector<CheckResult> run_all(double tol_scale) {
  if (!(tol_scale > 0.0)) {
    throw std::invalid_argument("run_all: tol_scale must be positive");
  }
  std::vector<CheckResult> out;
  out.reserve(registry().size());
  for (const auto& rec : registry()) out.push_back(run_check(rec, tol_scale));
  return out;
}

CheckResult lima_digamma_check() {
  return run_check(IdentityId::LIMA_DIGAMMA);
}

}  // namespace farhi::identities
