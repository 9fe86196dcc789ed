#ifndef FARHI_IDENTITIES_HPP
#define FARHI_IDENTITIES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace farhi::identities {

enum class IdentityId {
  EQ1_POINTWISE,
  EQ2_ETA_DEF,
  EQ3_KUMMER_POINTWISE,
  EQ4_CLOSED_FORM,
  EQ5_LINEAR,
  EQ6_LOGSIN,
  EQ7_ORTHOG,
  EQ8_HALF_INT,
  EQ9_GK_LIMIT,
  EQ10_GLAISHER_INT,
  EQ11_ETA_VIA_A,
  EQ12_ZETAPRIME,
  EQ13_ALT_SUM,
  EQ14_COMBINED_SUM,
  EQ16_MALMSTEN,
  EQ17_SHIFTED,
  EQ18_I1,
  EQ19_I2,
  EQ20_I3,
  EQ21_COMBINED,
  EQ22_CI_PART,
  EQ23_CI_PART2,
  EQ26_ETA_MALMSTEN,
  LIMA_DIGAMMA,
};

std::string to_string(IdentityId id);

// One registered identity: both sides are evaluated independently; the
// only shared state is the constants table. Parameterized identities
// carry a fixed sample set and report the worst sample.
struct IdentityRecord {
  IdentityId id;
  std::string description;
  std::string paper_ref;
  double tol;
  std::vector<double> params;  // empty -> single evaluation at param 0
  std::function<double(double)> lhs;
  std::function<double(double)> rhs;
};

struct CheckResult {
  IdentityId id;
  double lhs_value = 0.0;
  double rhs_value = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;  // denominator max(|lhs|, |rhs|, 1)
  double tol = 0.0;      // effective tolerance (after tol_scale)
  bool pass = false;
  std::int64_t evals = 0;
  double runtime_ms = 0.0;
  std::string diagnostic;  // nonempty when an evaluator threw
};

const std::vector<IdentityRecord>& registry();

// Returns nullptr for an unknown name.
const IdentityRecord* find(std::string_view name);

CheckResult run_check(const IdentityRecord& rec, double tol_scale = 1.0);
CheckResult run_check(IdentityId id, double tol_scale = 1.0);

// Runs every registered check in registry order. Failures are data, not
// errors: the result list always has one entry per registered identity.
std::vector<CheckResult> run_all(double tol_scale = 1.0);

// A companion digamma integral, obtained by parts from the definition:
// int_0^1 psi(x) sin^2(pi x) dx = -pi eta / 2.
CheckResult lima_digamma_check();

}  // namespace farhi::identities

#endif
