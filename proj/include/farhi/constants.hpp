#ifndef FARHI_CONSTANTS_HPP
#define FARHI_CONSTANTS_HPP

namespace farhi::constants {

// Named constants consumed by the identity checks. Computed once on first
// access and immutable afterwards; initialization is race-free.
struct ConstantsTable {
  double pi;
  double gamma;         // Euler-Mascheroni
  double log_two_pi;
  double zeta_prime_2;  // zeta'(2)
  double log_glaisher;  // log A
  double ci_two_pi;     // Ci(2 pi)
  double eta_closed;    // (gamma + log 2pi)/pi
};

const ConstantsTable& table();

// gamma = lim (H_N - log N), via the Euler-Maclaurin corrected harmonic
// sum at N = 10^4.
double euler_gamma();

// zeta'(2) = -sum log(n)/n^2.
double zeta_prime_2();

// log A = [-6 zeta'(2)/pi^2 + gamma + log 2pi]/12.
double log_glaisher();

// eta = (gamma + log 2pi)/pi.
double eta_closed_form();

}  // namespace farhi::constants

#endif
