#pragma once

#include <string>
#include <utility>
#include <vector>

#include "freudlab/complex.hpp"
#include "freudlab/freud.hpp"
#include "freudlab/sobolev.hpp"
#include "freudlab/verify.hpp"

namespace freudlab {

/// phi(z) = z + sqrt(z^2 - 1) on C minus [-1, 1], the branch with |phi| > 1.
/// Throws DomainError for z on the segment (imaginary part zero to working
/// precision and |Re z| <= 1).
Complex phi(const Complex& z);

/// (4/3)^(1/4), the endpoint of the scaled cut.
Real scaled_cut_endpoint(Precision p);

/// (12^(1/4) x phi(u) / (1 + phi(u)^2))^(r+1) with u = (3/4)^(1/4) x.
/// Since phi(u) + 1/phi(u) = 2u this is identically 1; it is evaluated
/// term by term anyway so that its distance from 1 measures the error of phi.
Complex ratio_target(const Complex& x, int r);

/// 12^(1/4) / phi(u), u = (3/4)^(1/4) x: the limit of
/// n^(1/4) P_{n-1}(n^(1/4) x) / P_n(n^(1/4) x).
Complex p_ratio_limit_target(const Complex& x);

struct RatioSample {
  Complex x;
  int n = 0;
  std::string params;
  /// P_n(n^(1/4) x) / Q_n(n^(1/4) x).
  Complex empirical;
  Complex target;
  Real abs_error;
};

/// Throws PoleError when Q_n vanishes at the scaled point.
RatioSample empirical_ratio(int n, const Complex& x, const QFamily& q, const FreudTable& freud);

/// n^(1/4) P_{n-1}(n^(1/4) x) / P_n(n^(1/4) x) against p_ratio_limit_target.
RatioSample p_ratio_sample(int n, const Complex& x, const FreudTable& freud);

struct LimitDiagnostics {
  std::string name;
  std::vector<std::pair<int, Real>> samples;
  Real limit;
  std::vector<Real> deviations;

  /// |value - limit| at index n, if sampled.
  std::optional<Real> deviation_at(int n) const;
  int largest_index() const;
};

/// Diagnostics for every sequence present in `conn` plus c_n / sqrt n and
/// k̂_n / k_n (= b_n / c_n for lambda2_zero, sigma_n / b_n for lambda2_pos).
/// Indices outside a table are skipped.
std::vector<LimitDiagnostics> limit_diagnostics(const ConnectionTable& conn, const FreudTable& freud,
                                                const std::vector<int>& ns);

/// c_n / sqrt n only.
LimitDiagnostics c_limit_diagnostics(const FreudTable& freud, const std::vector<int>& ns);

/// Exact checks in Q(sqrt 3) behind the limit of b_n / sqrt n:
///   1 - 4 sqrt3 t + 18 t^2 - 12 sqrt3 t^3 + 9 t^4 = 9 (t - 1/sqrt3)^4,
///   the same quartic against (1/9)(t - 1/sqrt3)^4 (informational),
///   t = 1/sqrt3 is its only real root,
///   t (2 sqrt3 - 21 t + 24 sqrt3 t^2 - 36 t^3) has real roots 0 and 1/(2 sqrt3) only.
VerifyReport limit_polynomial_checks();

/// Conjecture diagnostics for general r: P_n / Q_{n,r} at n^(1/4) x against
/// ratio_target(x, r) over the grid. One check per x compares the deviation
/// at the largest n with the smallest n; these are trend observations, never
/// proofs, and are labelled as such.
struct PredictionResult {
  std::vector<RatioSample> samples;
  VerifyReport trends;
};

PredictionResult prediction_experiment(int r, const SobolevParams& params, const std::vector<int>& ns,
                                       const std::vector<Complex>& xs, const FreudTable& freud,
                                       const Real& tol, GramSchmidtOptions opts = {});

}  // namespace freudlab
