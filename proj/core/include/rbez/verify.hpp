#ifndef RBEZ_VERIFY_HPP
#define RBEZ_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbez/curve.hpp"
#include "rbez/deriv.hpp"

namespace rbez {

struct CheckResult {
  std::string name;
  bool passed = true;
  double max_deviation = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  /// One "PASS|FAIL  name  max_dev=..." line per check.
  std::string format() const;
};

struct VerifyOptions {
  std::size_t max_order = 4;
  std::uint64_t degree_cap = kDefaultDegreeCap;
  /// Negative control: perturb one weight-table coefficient at this level
  /// before the table-based checks run.
  std::optional<std::size_t> tamper_weight_level;
};

/// Runs every structural and cross-validation check on one curve, exactly:
/// coefficient zero-sum, reversal symmetry, weight endpoint powers, the
/// pointwise denominator identity, Leibniz-oracle equivalence, endpoint
/// consistency (full and reduced forms), the degree-1 closed form when it
/// applies, and float-path agreement.
VerificationReport verify_curve(const RationalBezierCurve<Rational>& curve, const VerifyOptions& options);

/// Parameters at which derivative values are cross-checked.
std::vector<Rational> oracle_parameters();

}  // namespace rbez

#endif  // RBEZ_VERIFY_HPP
