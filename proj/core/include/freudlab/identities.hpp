#pragma once

#include "freudlab/freud.hpp"
#include "freudlab/sobolev.hpp"
#include "freudlab/verify.hpp"

namespace freudlab {

/// String-equation residuals |4 c_n (c_{n+1}+c_n+c_{n-1}) - n| / n and the
/// coefficient-level derivative identity P_n' = n P_{n-1} + d_n P_{n-3}.
VerifyReport freud_residuals(const FreudTable& freud, int nmax);

/// max_{m<n} |<Q_m, Q_n>_S| / sqrt(k̂_m k̂_n), one check per n.
VerifyReport orthogonality_residuals(const SobolevTable& st, int nmax);

/// Residuals of every relation attached to `conn.kind`:
///
/// lambda2_zero: both connection relations at coefficient level, the two
///   scalar identities linking a_n, b_n to c_n, the integral of Q_{2m+1}/x
///   against the weight (m <= 10) and the value of Q_{2m}(0). The Q_{2m}(0)
///   test in the form implied by the connection relation gates; the variant
///   with a_{2m} in place of a_{2m-1} is informational.
/// lambda2_pos: the three connection relations and identities 1-5. Identity 4
///   is reported with sigma_{n+2}/b_{n+2} (gating) and with
///   sigma_{n+2}/alpha_{n+2} (informational).
VerifyReport identity_residuals(const SobolevTable& st, const ConnectionTable& conn,
                                const FreudTable& freud, int nmax);

/// Fast k̂ recurrence against Gram-Schmidt: relative gaps in k̂_n, a_n, b_n.
/// Needs no derivative masses.
VerifyReport fast_path_residuals(const SobolevTable& st, const FreudTable& freud, int nmax);

/// Even-index Q against the run with lambdas = {lambda0}; odd-index Q against
/// the run with lambdas = {0, lambda1} (which is P when lambda1 = 0). Needs r <= 1.
VerifyReport decoupling_residuals(const SobolevTable& st, const FreudTable& freud, int nmax);

/// Everything that applies to st.params: Freud residuals, orthogonality, the
/// lambda2_zero suite and fast path when there are no derivative masses, the
/// lambda2_pos suite when r = 1, and decoupling when r <= 1.
VerifyReport identity_suite(const SobolevTable& st, const FreudTable& freud, int nmax);

}  // namespace freudlab
