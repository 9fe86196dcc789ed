#include "farhi/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <numbers>

#include "farhi/specfun.hpp"

namespace farhi::quadrature {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

std::atomic<double> g_bias{0.0};
std::atomic<std::int64_t> g_evals{0};

struct EvalBudget {
  std::int64_t used = 0;
  std::int64_t limit;

  explicit EvalBudget(std::int64_t max_evals) : limit(max_evals) {}

  void charge() {
    ++used;
    g_evals.fetch_add(1, std::memory_order_relaxed);
    if (used > limit) {
      throw QuadratureError(QuadErrorKind::NoConvergence,
                            "quadrature: evaluation budget exhausted");
    }
  }
};

double checked(double fx, double x) {
  if (!std::isfinite(fx)) {
    throw QuadratureError(
        QuadErrorKind::NonFinite,
        "quadrature: integrand returned a non-finite value at x = " +
            std::to_string(x));
  }
  return fx;
}

// One tanh-sinh node pair at abscissa +/-t (t > 0), or the center node at
// t = 0. Returns the weighted contribution w(t) [f(x+) + f(x-)].
// The abscissa is formed from its distance to the nearer endpoint so that
// log-type endpoint singularities are resolved to full precision.
class TanhSinh {
 public:
  TanhSinh(const Integrand& f, double a, double b, EvalBudget& budget)
      : f_(f), a_(a), b_(b), width_(b - a), budget_(budget) {}

  // Sum over nodes t = j h (j in j0, j0+step, ...) of the current level.
  double scan(double h, int j0, int step) {
    double sum = 0.0;
    if (j0 == 0) {
      budget_.charge();
      sum += kHalfPi * (width_ / 2.0) * checked(f_((a_ + b_) / 2.0), (a_ + b_) / 2.0);
      j0 += step;
    }
    int consecutive_negligible = 0;
    for (int j = j0;; j += step) {
      const double t = j * h;
      const double u = kHalfPi * std::sinh(t);
      const double eu = std::exp(-2.0 * u);  // in (0, 1]
      const double r = eu / (1.0 + eu);      // offset fraction from endpoint
      if (r == 0.0) break;                   // weights underflow beyond here
      const double sech2 = 4.0 * eu / ((1.0 + eu) * (1.0 + eu));
      const double w = kHalfPi * std::cosh(t) * sech2 * (width_ / 2.0);
      if (w == 0.0) break;
      const double xp = b_ - width_ * r;
      const double xm = a_ + width_ * r;
      budget_.charge();
      budget_.charge();
      const double contrib = w * (checked(f_(xp), xp) + checked(f_(xm), xm));
      sum += contrib;
      if (std::abs(contrib) <= 1e-18 * (std::abs(sum) + 1e-300) && t > 3.0) {
        if (++consecutive_negligible >= 3) break;
      } else {
        consecutive_negligible = 0;
      }
    }
    return sum;
  }

 private:
  const Integrand& f_;
  double a_, b_, width_;
  EvalBudget& budget_;
};

// Exp-sinh nodes for (0, inf): x = exp((pi/2) sinh t), w = (pi/2) cosh(t) x.
class ExpSinh {
 public:
  ExpSinh(const Integrand& f, EvalBudget& budget) : f_(f), budget_(budget) {}

  double scan(double h, int j0, int step) {
    double sum = 0.0;
    if (j0 == 0) {
      budget_.charge();
      sum += kHalfPi * checked(f_(1.0), 1.0);  // t = 0 -> x = 1
      j0 += step;
    }
    sum += scan_direction(h, j0, step, +1);
    sum += scan_direction(h, j0, step, -1);
    return sum;
  }

 private:
  double scan_direction(double h, int j0, int step, int sign) {
    double sum = 0.0;
    int consecutive_negligible = 0;
    for (int j = j0;; j += step) {
      const double t = sign * j * h;
      const double u = kHalfPi * std::sinh(t);
      const double x = std::exp(u);
      if (x == 0.0 || !std::isfinite(x)) break;
      budget_.charge();
      const double fx = checked(f_(x), x);
      double contrib = 0.0;
      if (fx != 0.0) {
        contrib = kHalfPi * std::cosh(t) * x * fx;
        if (!std::isfinite(contrib)) {
          throw QuadratureError(QuadErrorKind::NonFinite,
                                "quadrature: weighted contribution overflowed");
        }
        sum += contrib;
      }
      if (std::abs(contrib) <= 1e-18 * (std::abs(sum) + 1e-300) &&
          std::abs(t) > 3.0) {
        if (++consecutive_negligible >= 3) break;
      } else {
        consecutive_negligible = 0;
      }
    }
    return sum;
  }

  const Integrand& f_;
  EvalBudget& budget_;
};

template <class NodeScanner>
QuadResult de_levels(NodeScanner& scanner, const QuadConfig& cfg,
                     EvalBudget& budget, std::vector<double>* trace) {
  double h = 1.0;
  double estimate = h * scanner.scan(h, 0, 1);
  if (trace) trace->push_back(estimate);
  double err = std::abs(estimate);
  for (int level = 1; level <= cfg.max_levels; ++level) {
    h /= 2.0;
    const double refined = estimate / 2.0 + h * scanner.scan(h, 1, 2);
    err = std::abs(refined - estimate);
    estimate = refined;
    if (trace) trace->push_back(estimate);
    if (level >= 2 && err <= cfg.abs_tol) {
      return {estimate + g_bias.load(), err, budget.used};
    }
  }
  if (trace) return {estimate + g_bias.load(), err, budget.used};
  throw QuadratureError(QuadErrorKind::NoConvergence,
                        "quadrature: tolerance not reached within max_levels");
}

}  // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadConfig& cfg) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("integrate_finite: require finite a < b");
  }
  EvalBudget budget(cfg.max_evals);
  TanhSinh scanner(f, a, b, budget);
  return de_levels(scanner, cfg, budget, nullptr);
}

QuadResult integrate_semi_infinite(const Integrand& f, const QuadConfig& cfg) {
  EvalBudget budget(cfg.max_evals);
  ExpSinh scanner(f, budget);
  return de_levels(scanner, cfg, budget, nullptr);
}

double eta_by_direct_quadrature(const QuadConfig& cfg) {
  const auto r = integrate_finite(
      [](double x) { return specfun::log_gamma(x) * std::sin(2.0 * kPi * x); },
      0.0, 1.0, cfg);
  return 2.0 * r.value;
}

double malmsten_integrand(double t) {
  if (t < 1e-8) return 1.0 / (2.0 * kPi);  // removable singularity
  const double num =
      4.0 * kPi * kPi * (-std::expm1(-t)) - t * t * std::exp(-t);
  return num / (2.0 * kPi * t * (4.0 * kPi * kPi + t * t));
}

double eta_by_malmsten(const QuadConfig& cfg) {
  const auto r = integrate_semi_infinite(malmsten_integrand, cfg);
  return 2.0 * r.value;
}

namespace detail {

void set_result_bias(double bias) { g_bias.store(bias); }

std::int64_t eval_count() { return g_evals.load(std::memory_order_relaxed); }

std::vector<double> tanh_sinh_levels(const Integrand& f, double a, double b,
                                     int levels) {
  QuadConfig cfg;
  cfg.abs_tol = 0.0;  // never stop early
  cfg.max_levels = levels;
  cfg.max_evals = 10'000'000;
  EvalBudget budget(cfg.max_evals);
  TanhSinh scanner(f, a, b, budget);
  std::vector<double> trace;
  de_levels(scanner, cfg, budget, &trace);
  return trace;
}

}  // namespace detail

}  // namespace farhi::quadrature
