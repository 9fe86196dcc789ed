#include "farhi/specfun.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace farhi::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLogTwoPi = 0.91893853320467274178;

[[noreturn]] void throw_domain(const char* fn, double x) {
  if (x == std::floor(x)) {
    throw SpecfunError(ErrorKind::DomainPole, x,
                       std::string(fn) + ": pole at non-positive integer");
  }
  throw SpecfunError(ErrorKind::DomainNegative, x,
                     std::string(fn) + ": argument out of domain");
}

// Lanczos coefficients, g = 7, 9 terms (Godfrey's set).
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double log_gamma_lanczos(double x) {
  // valid for x >= 0.5
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(a);
}

// Ci and Si for x > cutover via the continued fraction for E1(ix)
// (modified Lentz). Ci(x) = -Re E1(ix), Si(x) = pi/2 + Im E1(ix).
void cisi_large(double x, double* ci, double* si) {
  using C = std::complex<double>;
  const C z(0.0, x);
  C b = z + 1.0;
  C c(1e308, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 1; i <= 200; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C delta = c * d;
    h *= delta;
    if (std::abs(delta.real() - 1.0) < 1e-16 &&
        std::abs(delta.imag()) < 1e-16) {
      break;
    }
  }
  const C e1 = std::exp(-z) * h;
  if (ci) *ci = -e1.real();
  if (si) *si = kPi / 2 + e1.imag();
}

constexpr double kEulerGamma = 0.57721566490153286061;

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw_domain("log_gamma", x);
  if (x > 1e300) {
    throw SpecfunError(ErrorKind::Overflow, x, "log_gamma: result overflows");
  }
  if (x < 0.5) {
    // reflection: log Gamma(x) = log pi - log sin(pi x) - log Gamma(1 - x)
    return std::log(kPi) - std::log(std::sin(kPi * x)) -
           log_gamma_lanczos(1.0 - x);
  }
  return log_gamma_lanczos(x);
}

double digamma(double x) {
  if (!(x > 0.0)) throw_domain("digamma", x);
  double r = 0.0;
  while (x < 10.0) {
    r -= 1.0 / x;
    x += 1.0;
  }
  // asymptotic series with B_2 .. B_12
  static constexpr std::array<double, 6> kBernoulliOver2n = {
      1.0 / 12.0,  -1.0 / 120.0, 1.0 / 252.0,
      -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0,
  };
  r += std::log(x) - 0.5 / x;
  const double x2 = 1.0 / (x * x);
  double p = x2;
  for (double coeff : kBernoulliOver2n) {
    r -= coeff * p;
    p *= x2;
  }
  return r;
}

double cin_cos(double x) {
  if (!(x > 0.0)) throw_domain("cin_cos", x);
  if (x > kCiSiBranchCutover) {
    double ci;
    cisi_large(x, &ci, nullptr);
    return ci;
  }
  // Ci(x) = gamma + log x + sum_{k>=1} (-1)^k x^{2k} / (2k (2k)!)
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k <= 40; ++k) {
    term *= -x * x / ((2.0 * k) * (2.0 * k - 1.0));
    const double add = term / (2.0 * k);
    sum += add;
    if (std::abs(add) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return kEulerGamma + std::log(x) + sum;
}

double sin_integral(double x) {
  if (x < 0.0) throw_domain("sin_integral", x);
  if (x == 0.0) return 0.0;
  if (x > kCiSiBranchCutover) {
    double si;
    cisi_large(x, nullptr, &si);
    return si;
  }
  // Si(x) = sum_{k>=0} (-1)^k x^{2k+1} / ((2k+1) (2k+1)!)
  double sum = x;
  double term = x;
  for (int k = 1; k <= 40; ++k) {
    term *= -x * x / ((2.0 * k) * (2.0 * k + 1.0));
    const double add = term / (2.0 * k + 1.0);
    sum += add;
    if (std::abs(add) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

double log_sin_pi(double x) {
  if (!(x > 0.0 && x < 1.0)) throw_domain("log_sin_pi", x);
  const double xm = x <= 0.5 ? x : 1.0 - x;
  return std::log(std::sin(kPi * xm));
}

double log_hyperfactorial(long n) {
  if (n < 1) {
    throw SpecfunError(ErrorKind::DomainNegative, static_cast<double>(n),
                       "log_hyperfactorial: n must be >= 1");
  }
  // compensated sum of k log k
  double sum = 0.0;
  double comp = 0.0;
  for (long k = 2; k <= n; ++k) {
    const double term = k * std::log(static_cast<double>(k));
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

std::string hyperfactorial_exact(int n) {
  if (n < 1 || n > 10) {
    throw SpecfunError(ErrorKind::Overflow, static_cast<double>(n),
                       "hyperfactorial_exact: supported for 1 <= n <= 10");
  }
  // base-1e9 bignum, H(10) has 45 digits
  std::vector<std::uint32_t> limbs{1};
  constexpr std::uint64_t kBase = 1'000'000'000;
  for (int k = 2; k <= n; ++k) {
    for (int rep = 0; rep < k; ++rep) {
      std::uint64_t carry = 0;
      for (auto& limb : limbs) {
        const std::uint64_t v = static_cast<std::uint64_t>(limb) * k + carry;
        limb = static_cast<std::uint32_t>(v % kBase);
        carry = v / kBase;
      }
      while (carry != 0) {
        limbs.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
      }
    }
  }
  std::string out = std::to_string(limbs.back());
  for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
    std::string part = std::to_string(*it);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

}  // namespace farhi::specfun
