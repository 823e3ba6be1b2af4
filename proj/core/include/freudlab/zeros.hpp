#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freudlab/freud.hpp"
#include "freudlab/sobolev.hpp"
#include "freudlab/verify.hpp"

namespace freudlab {

enum class Interlace { strict, violated, degenerate };

const char* to_string(Interlace v);

/// Real zeros of a degree-n polynomial, ascending, each the midpoint of a
/// sign-change bracket of half-width radii[i]. A zero at the origin forced by
/// odd parity has radius 0.
struct ZeroReport {
  int n = 0;
  std::vector<Real> zeros;
  std::vector<Real> radii;
  bool all_real = false;
  /// Number of certified real zeros (equals n when all_real).
  int found = 0;
  /// Positive zeros of the comparison polynomial, when one was used.
  std::optional<std::vector<Real>> reference;
  /// One verdict per positive zero of this polynomial, in ascending order.
  std::vector<Interlace> interlace;
  /// Largest positive zero of this polynomial exceeds the reference's largest.
  std::optional<bool> outer_beyond_reference;
  std::string note;

  std::vector<Real> positive() const;
  /// Every verdict strict.
  bool strictly_interlaces() const;
  /// Every verdict degenerate (the zero sets coincide).
  bool degenerate() const;
  /// Ascending with gaps larger than twice the largest radius.
  bool separated() const;
};

/// Jacobi-matrix eigenvalues polished by bisection on P_n to half-width <= tol.
ZeroReport zeros_P(const FreudTable& freud, int n, const Real& tol);

/// Zeros of a real polynomial of definite parity, found on the positive axis
/// by bisection over sign changes at `hints` (positive points, any order) and
/// at the Fujiwara bound, then mirrored. If fewer than expected sign changes
/// appear, the positive axis up to the bound is swept on a uniform grid of
/// 64 n cells.
ZeroReport zeros_parity_poly(const Poly& q, std::vector<Real> hints, const Real& tol);

/// Zeros of Q_n, bracketed by the zeros of P_{n-1}, P_n, P_{n+1}.
ZeroReport zeros_Q(const SobolevTable& st, const FreudTable& freud, int n, const Real& tol);

/// Compares positive zeros `u` (the subject) against `v` (the reference).
/// Zeros within 100 tol of each other are degenerate pairs; otherwise the
/// merged list must alternate. When v has one fewer element the subject must
/// enclose it (u_1 < v_1 < u_2 < ... < u_m).
std::vector<Interlace> interlace_verdicts(const std::vector<Real>& u, const std::vector<Real>& v,
                                          const Real& tol);

/// Zeros of Q_n with interlacing verdicts against the zeros of P_n.
ZeroReport interlacing_report(const SobolevTable& st, const FreudTable& freud, int n,
                              const Real& tol);

/// Unit-norm Q̂_n = Q_n / sqrt(k̂_n): A_n = <x^2 Q̂_n, Q̂_{n+2}>_S,
/// B_n = <x^2 Q̂_n, Q̂_n>_S, the residual of
/// x^2 Q̂_n = A_n Q̂_{n+2} + B_n Q̂_n + A_{n-2} Q̂_{n-2}, the symmetry
/// A_n = <x^2 Q̂_{n+2}, Q̂_n>_S, and interlacing of zeros of Q̂_n with Q̂_{n-2}.
/// Needs r <= 1.
VerifyReport normalized_x2_recurrence_check(const SobolevTable& st, const FreudTable& freud,
                                            int nmax, const Real& tol);

}  // namespace freudlab
