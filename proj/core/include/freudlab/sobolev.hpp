#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freudlab/complex.hpp"
#include "freudlab/freud.hpp"
#include "freudlab/poly.hpp"
#include "freudlab/real.hpp"

namespace freudlab {

/// Point masses at the origin: lambdas[k] weights f^(k)(0) g^(k)(0).
///
/// Notation: the classical two-mass product lambda_1 f(0)g(0) + lambda_2
/// f'(0)g'(0) is lambdas = {lambda_1, lambda_2}, i.e. index = derivative order.
struct SobolevParams {
  std::vector<Real> lambdas;

  SobolevParams() = default;
  explicit SobolevParams(std::vector<Real> l);

  /// Parses a comma-separated list of nonnegative decimals.
  static SobolevParams parse(const std::string& csv, Precision p);

  int r() const { return static_cast<int>(lambdas.size()) - 1; }
  /// Mass on derivative k, zero beyond r.
  Real mass(int k, Precision p) const;
  bool all_zero() const;
  /// No mass on any derivative: only f(0)g(0) (possibly zero) is present.
  bool derivative_masses_zero() const;
  /// No mass on derivatives of order >= 2, so multiplication by x^2 is
  /// self-adjoint for the product.
  bool x2_self_adjoint() const;
  /// Compact decimal form, e.g. "1,0.25".
  std::string to_string() const;
};

/// Monic Sobolev orthogonal polynomials Q_0..Q_N and k̂_n = <Q_n, Q_n>_S.
struct SobolevTable {
  SobolevParams params;
  std::vector<Poly> Q;
  std::vector<Real> khat;
  /// gram[j][i] = <x^i, Q_j>_S for 0 <= i <= N (zero unless i = j mod 2).
  std::vector<std::vector<Real>> gram;
  Precision precision = kDefaultPrecision;

  int N() const { return static_cast<int>(Q.size()) - 1; }
  /// <p, Q_j>_S for deg p <= N, using the stored monomial products.
  Real inner_with_Q(const Poly& p, int j) const;
};

enum class ConnectionCase { lambda2_zero, lambda2_pos };

const char* to_string(ConnectionCase c);

/// Connection coefficients between P_n and Q_n. Entries outside a relation's
/// range of validity are absent, never zero.
///
/// lambda2_zero: x P_n = Q_{n+1} + a_n Q_{n-1},  x Q_n = P_{n+1} + b_n P_{n-1},
///   a_n = k_n / k̂_{n-1},  b_n = k̂_n / k_{n-1}.
/// lambda2_pos: x P_{2n-1} = Q_{2n} + a_n Q_{2n-2},
///   x^2 P_n = Q_{n+2} + b_n Q_n + alpha_n Q_{n-2},
///   x^2 Q_n = P_{n+2} + sigma_n P_n + delta_n P_{n-2},
///   a_n = k_{2n-1}/k̂_{2n-2}, alpha_n = k_n/k̂_{n-2}, delta_n = k̂_n/k_{n-2},
///   b_n = <x^2 P_n, Q_n>_S / k̂_n, sigma_n = b_n k̂_n / k_n.
struct ConnectionTable {
  ConnectionCase kind = ConnectionCase::lambda2_zero;
  std::vector<std::optional<Real>> a;
  std::vector<std::optional<Real>> b;
  std::vector<std::optional<Real>> alpha;
  std::vector<std::optional<Real>> sigma;
  std::vector<std::optional<Real>> delta;

  int size() const { return static_cast<int>(a.size()); }
  static const std::optional<Real>& at(const std::vector<std::optional<Real>>& seq, int n);
};

/// Integral part from exact moments plus sum_k lambda_k p^(k)(0) q^(k)(0).
Real sobolev_inner(const Poly& p, const Poly& q, const SobolevParams& params);
Real sobolev_inner(const Poly& p, const Poly& q, const SobolevParams& params,
                   const MomentTable& moments);

struct GramSchmidtOptions {
  long cap_bits = 16384;
};

/// Monic Q_0..Q_N by Gram-Schmidt under the Sobolev product, split by parity.
///
/// Each Q_n is obtained by orthogonalising x Q_{n-1} (same span as x^n modulo
/// lower degrees) against Q_j, j < n, j = n mod 2. Runs at
/// max(prec, 256, 8 N) bits and again at twice that; if any k̂_n differs
/// relatively by more than tol the precision keeps doubling up to the cap
/// (PrecisionError naming the first unstable n). Returns the higher-precision
/// run.
SobolevTable gram_schmidt_Q(int N, const SobolevParams& params, Precision prec, const Real& tol,
                            GramSchmidtOptions opts = {});

/// Fast path for the case without derivative masses (lambdas = {lambda0}).
struct FastConnection {
  std::vector<Real> khat;
  ConnectionTable conn;
};

/// k̂_0 = k_0 + lambda0, k̂_1 = k_1,
/// k̂_{n+1} = (c_{n+1} + c_n) k_n - k_n^2 / k̂_{n-1};
/// a_n = k_n / k̂_{n-1}, b_n = k̂_n / k_{n-1}. Needs c up to N.
FastConnection khat_recurrence_lambda2zero(int N, const Real& lambda0, const FreudTable& freud);

/// Q_n(x) from Q_{m+1} = x P_m - a_m Q_{m-1}, Q_0 = 1, Q_1 = x.
Complex q_eval_fast(int n, const Complex& x, const ConnectionTable& conn, const FreudTable& freud);
Real q_eval_fast(int n, const Real& x, const ConnectionTable& conn, const FreudTable& freud);

/// Definitional a_n, b_n for the case without derivative masses, from a
/// Gram-Schmidt table.
ConnectionTable connection_zero(const SobolevTable& st, const FreudTable& freud);

/// Definitional a_n, b_n, alpha_n, sigma_n, delta_n of the x^2 connection
/// relations. Valid whenever x^2 is self-adjoint for the product (r <= 1).
ConnectionTable connection_pos(const SobolevTable& st, const FreudTable& freud);

/// Odd-step a_n = k_{2n-1} / k̂_{2n-2} of the x^2 connection, n = 1..n_max,
/// for r <= 1. Even-index k̂ depend on lambda0 alone, so they come from the
/// fast recurrence with lambdas = {lambda0}. Entry 0 is absent.
std::vector<std::optional<Real>> odd_step_a_decoupled(int n_max, const Real& lambda0,
                                                      const FreudTable& freud);

/// Evaluates Q_n at a point through whichever representation is available.
class QEvaluator {
 public:
  /// Zero masses: Q_n is P_n and is evaluated by the Freud recurrence.
  static QEvaluator freud_only(const FreudTable& freud);
  /// No derivative masses: the fast connection recurrence.
  static QEvaluator fast(const FastConnection& fast, const FreudTable& freud);
  /// Coefficient vectors from Gram-Schmidt.
  static QEvaluator table(const SobolevTable& st);

  Complex operator()(int n, const Complex& x) const;
  int max_n() const;

 private:
  enum class Kind { freud, fast, table };
  Kind kind_ = Kind::freud;
  const FreudTable* freud_ = nullptr;
  const FastConnection* fast_ = nullptr;
  const SobolevTable* table_ = nullptr;
};

/// Owns whatever is needed to evaluate Q_0..Q_N for a parameter set, using
/// the cheapest exact route per index:
///   all masses zero: Q_n = P_n;
///   r <= 1, n even: Q_n depends only on lambda0, so the fast connection
///     recurrence with lambdas = {lambda0} applies;
///   r <= 1, n odd: P_n when lambda1 = 0, otherwise a Gram-Schmidt table for
///     lambdas = {0, lambda1};
///   r >= 2: a Gram-Schmidt table.
/// Tables are built only as far as the largest requested index of each
/// parity. The Freud table must cover them and outlive this object.
class QFamily {
 public:
  QFamily(const SobolevParams& params, const FreudTable& freud, const std::vector<int>& ns,
          const Real& tol, GramSchmidtOptions opts = {});

  Complex operator()(int n, const Complex& x) const;
  Real operator()(int n, const Real& x) const;
  int max_n() const { return n_max_; }
  const SobolevParams& params() const { return params_; }
  /// Short description of the route used for index n.
  std::string route(int n) const;

 private:
  void check(int n) const;

  SobolevParams params_;
  const FreudTable* freud_;
  int n_max_;
  std::optional<FastConnection> fast_;
  std::optional<SobolevTable> table_;
};

}  // namespace freudlab
