#pragma once

#include <vector>

#include "freudlab/complex.hpp"
#include "freudlab/poly.hpp"
#include "freudlab/real.hpp"

namespace freudlab {

enum class StringMethod { forward, newton };

const char* to_string(StringMethod m);

/// Recurrence coefficients c_0..c_N and squared norms k_0..k_N of the monic
/// orthogonal polynomials for the weight exp(-x^4) on the real line:
///
///   x P_n = P_{n+1} + c_n P_{n-1},     n = 4 c_n (c_{n+1} + c_n + c_{n-1}),
///   k_n = <P_n, P_n> = c_n k_{n-1}.
struct FreudTable {
  std::vector<Real> c;
  std::vector<Real> k;
  StringMethod method = StringMethod::newton;
  Precision precision = kDefaultPrecision;
  /// Largest index whose c_n is certified to the table's accuracy target.
  int trusted = 0;

  int n_max() const { return static_cast<int>(c.size()) - 1; }
  /// |4 c_n (c_{n+1} + c_n + c_{n-1}) - n| for 1 <= n <= N-1.
  Real string_residual(int n) const;
};

/// Even moments mu_m = integral of x^m exp(-x^4) over R = Gamma((m+1)/4) / 2;
/// odd moments are exactly zero.
class MomentTable {
 public:
  MomentTable(int max_order, Precision p);

  const Real& operator()(int m) const;
  int max_order() const { return static_cast<int>(mu_.size()) - 1; }
  Precision precision() const { return precision_; }

 private:
  std::vector<Real> mu_;
  Precision precision_;
};

Real moment(int m, Precision p);

/// Forward iteration c_{n+1} = n/(4 c_n) - c_n - c_{n-1} from c_0 = 0,
/// c_1 = Gamma(3/4)/Gamma(1/4).
///
/// The recurrence amplifies rounding by roughly (2 + sqrt 3) per step, so it is
/// run at p and p + 64 bits; `trusted` is the largest index up to which both
/// runs agree to 2^(-p/2). Throws PrecisionError naming the index where a
/// nonpositive c_n appears.
FreudTable string_forward(int n_max, Precision p);

/// string_forward with the precision doubled until every index up to n_max is
/// trusted, or `cap_bits` is exceeded (PrecisionError). The returned table is
/// rounded to p.
FreudTable string_forward_escalating(int n_max, Precision p, long cap_bits = 16384);

struct NewtonOptions {
  /// Extra unknowns solved beyond n_max and then discarded. A negative value
  /// selects enough indices for the tail-closure error to decay below
  /// 2^(-p/2) before reaching n_max.
  int buffer = -1;
  int max_iterations = 80;
};

/// Damped Newton solve of the string equations F_n = 4 c_n (c_{n+1} + c_n +
/// c_{n-1}) - n = 0 for the positive solution, with c_0 = 0 and the tail
/// closed by c_{M+1} = sqrt((M+1)/12). c_1 is not imposed; it emerges.
FreudTable string_newton(int n_max, Precision p, const Real& tol, NewtonOptions opts = {});

/// Fills k_0 = mu_0 and k_n = c_n k_{n-1}.
FreudTable freud_norms(FreudTable table);

/// Monic P_n(x) by the upward three-term recurrence.
Complex eval_P(const FreudTable& t, int n, const Complex& x);
Real eval_P(const FreudTable& t, int n, const Real& x);

/// All values P_0(x), ..., P_n(x).
std::vector<Real> eval_P_all(const FreudTable& t, int n, const Real& x);

/// Monic coefficient vector of P_n with parity n mod 2.
Poly p_coefficients(const FreudTable& t, int n);
/// P_0, ..., P_n in one pass.
std::vector<Poly> p_coefficients_all(const FreudTable& t, int n);

/// d_n = 4 c_n c_{n-1} c_{n-2}, the coefficient in P_n' = n P_{n-1} + d_n P_{n-3}.
Real d_coeff(const FreudTable& t, int n);

struct GaussRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

/// n-point Gauss rule for exp(-x^4): nodes are the eigenvalues of the Jacobi
/// matrix (zero diagonal, off-diagonal sqrt c_j); the weight at x_i is the
/// Christoffel number 1 / sum_{j<n} P_j(x_i)^2 / k_j.
GaussRule gauss_freud(const FreudTable& t, int n, const Real& tol);

}  // namespace freudlab
