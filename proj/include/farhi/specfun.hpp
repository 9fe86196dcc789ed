#ifndef FARHI_SPECFUN_HPP
#define FARHI_SPECFUN_HPP

#include <stdexcept>
#include <string>

namespace farhi::specfun {

enum class ErrorKind { DomainPole, DomainNegative, Overflow };

class SpecfunError : public std::domain_error {
 public:
  SpecfunError(ErrorKind kind, double input, const std::string& what)
      : std::domain_error(what), kind_(kind), input_(input) {}
  ErrorKind kind() const noexcept { return kind_; }
  double input() const noexcept { return input_; }

 private:
  ErrorKind kind_;
  double input_;
};

// log Gamma(x) for x > 0. Lanczos (g = 7, 9 terms) for x >= 0.5,
// reflection formula below.
double log_gamma(double x);

// Digamma psi(x) = Gamma'(x)/Gamma(x) for x > 0.
// Recurrence shift to x >= 10, then the asymptotic Bernoulli series.
double digamma(double x);

// Cosine integral Ci(x) = -int_x^inf cos(t)/t dt, x > 0.
double cin_cos(double x);

// Sine integral Si(x) = int_0^x sin(t)/t dt, x >= 0.
double sin_integral(double x);

// log sin(pi x) for 0 < x < 1, symmetric about x = 1/2.
double log_sin_pi(double x);

// log H(n) where H(n) = prod_{k=1}^n k^k is the hyperfactorial.
double log_hyperfactorial(long n);

// Exact decimal value of H(n); only supported for n <= 10
// (H(10) already has 45 digits).
std::string hyperfactorial_exact(int n);

// Cutover between the power-series and continued-fraction branches of
// Ci/Si. Exposed so the branch-agreement tests can probe it.
inline constexpr double kCiSiBranchCutover = 12.0;

}  // namespace farhi::specfun

#endif
