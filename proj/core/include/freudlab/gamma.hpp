#pragma once

#include "freudlab/real.hpp"

namespace freudlab {

/// Arithmetic-geometric mean of two positive numbers.
Real agm(const Real& a, const Real& b);

/// Gamma(j/4) for odd j >= 1.
///
/// Gamma(1/4) comes from the lemniscate AGM identity
///   Gamma(1/4)^2 = (2 pi)^{3/2} / AGM(sqrt 2, 1),
/// Gamma(3/4) from the reflection formula Gamma(1/4) Gamma(3/4) = pi sqrt 2,
/// and larger arguments from Gamma(z + 1) = z Gamma(z).
Real gamma_quarter(int j, Precision p);

}  // namespace freudlab
