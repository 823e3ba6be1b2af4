#pragma once

#include <span>
#include <vector>

#include "freudlab/real.hpp"

namespace freudlab {

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `diag` and
/// sub/super-diagonal `offdiag`, in ascending order.
///
/// Implicit-shift QL. An off-diagonal entry is deflated once it drops below
/// the working epsilon relative to its neighbours or to the matrix norm, or
/// below `tol`; the eigenvalue error is bounded by the deflated entry.
/// Throws IterationError (carrying the eigenvalue index) if an eigenvalue
/// needs more than 60 sweeps.
std::vector<Real> symtridiag_eigen(std::span<const Real> diag, std::span<const Real> offdiag,
                                   const Real& tol);

}  // namespace freudlab
