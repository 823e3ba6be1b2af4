#include "freudlab/gamma.hpp"

#include "freudlab/error.hpp"

namespace freudlab {

Real agm(const Real& a0, const Real& b0) {
  if (a0.sign() <= 0 || b0.sign() <= 0) throw ParameterError("agm needs positive arguments");
  const Precision p = std::max(a0.precision(), b0.precision());
  Real a = a0.with_precision(p);
  Real b = b0.with_precision(p);
  const Real eps = Real::epsilon(p);
  for (int it = 0; it < 4 * p.bits; ++it) {
    Real next_a = (a + b) / 2;
    Real next_b = sqrt(a * b);
    a = std::move(next_a);
    b = std::move(next_b);
    if (abs(a - b) <= eps * a) return a;
  }
  throw IterationError("agm did not converge", 0);
}

Real gamma_quarter(int j, Precision p) {
  if (j < 1 || j % 2 == 0) {
    throw ParameterError("gamma_quarter needs an odd positive index, got " + std::to_string(j));
  }
  const Precision work{p.bits + 32};
  const Real pi = Real::pi(work);
  const Real two_pi = 2 * pi;
  const Real g14 = sqrt(two_pi * sqrt(two_pi) / agm(sqrt(Real(2, work)), Real(1, work)));

  // Start from Gamma(1/4) or Gamma(3/4) and climb by whole steps.
  const int base = (j % 4 == 1) ? 1 : 3;
  Real g = (base == 1) ? g14 : pi * sqrt(Real(2, work)) / g14;
  for (int k = base; k < j; k += 4) {
    g *= Real(k, work) / 4;
  }
  return g.with_precision(p);
}

}  // namespace freudlab
