#include "freudlab/verify.hpp"

namespace freudlab {

bool Check::passed(const Real& tol) const {
  if (verdict) return *verdict;
  return residual.is_finite() && residual <= tol;
}

void VerifyReport::append(const VerifyReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerifyReport::all_pass(const Real& tol) const {
  for (const auto& c : checks) {
    if (c.gating && !c.passed(tol)) return false;
  }
  return true;
}

Real VerifyReport::max_residual(Precision p) const {
  Real m(p);
  for (const auto& c : checks) {
    if (c.gating && !c.verdict) m = max(m, c.residual);
  }
  return m;
}

std::vector<const Check*> VerifyReport::named(const std::string& prefix) const {
  std::vector<const Check*> out;
  for (const auto& c : checks) {
    if (c.name.compare(0, prefix.size(), prefix) == 0) out.push_back(&c);
  }
  return out;
}

}  // namespace freudlab
