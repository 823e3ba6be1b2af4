#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freudlab/real.hpp"

namespace freudlab {

/// One named residual. `verdict`, when set, overrides the tolerance test
/// (used for boolean checks such as interlacing).
struct Check {
  std::string name;
  std::string params;
  int n = 0;
  Real residual;
  std::optional<bool> verdict;
  /// Informational checks are reported but never fail a report.
  bool gating = true;
  std::string note;

  bool passed(const Real& tol) const;
};

struct VerifyReport {
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const VerifyReport& other);
  /// True iff every gating check passes.
  bool all_pass(const Real& tol) const;
  /// Largest residual among gating checks without a verdict override.
  Real max_residual(Precision p) const;
  /// Checks whose name starts with `prefix`.
  std::vector<const Check*> named(const std::string& prefix) const;
};

}  // namespace freudlab
