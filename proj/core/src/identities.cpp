#include "freudlab/identities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "freudlab/error.hpp"
#include "freudlab/gamma.hpp"

namespace freudlab {

namespace {

Check make(std::string name, const std::string& params, int n, Real residual, bool gating = true,
           std::string note = {}) {
  Check c;
  c.name = std::move(name);
  c.params = params;
  c.n = n;
  c.residual = std::move(residual);
  c.gating = gating;
  c.note = std::move(note);
  return c;
}

const Real& need(const std::optional<Real>& v, const char* what, int n) {
  if (!v) throw RangeError(std::string(what) + "_" + std::to_string(n) + " absent");
  return *v;
}

}  // namespace

VerifyReport freud_residuals(const FreudTable& freud, int nmax) {
  VerifyReport rep;
  const std::string params = std::string("method=") + to_string(freud.method);
  const int top = std::min({nmax, freud.n_max() - 1, freud.trusted});
  for (int n = 1; n <= top; ++n) {
    rep.add(make("freud.string_equation", params, n, freud.string_residual(n) / Real(n, freud.precision)));
  }
  const int dtop = std::min(nmax, freud.n_max());
  if (dtop >= 3) {
    const std::vector<Poly> P = p_coefficients_all(freud, dtop);
    for (int n = 3; n <= dtop; ++n) {
      const auto i = static_cast<std::size_t>(n);
      Poly rhs = P[i - 1].scaled(Real(n, freud.precision));
      rhs += P[i - 3].scaled(d_coeff(freud, n));
      rep.add(make("freud.derivative_identity", params, n, relative_poly_residual(P[i].derivative(), rhs)));
    }
  }
  return rep;
}

VerifyReport orthogonality_residuals(const SobolevTable& st, int nmax) {
  VerifyReport rep;
  const std::string params = st.params.to_string();
  const int top = std::min(nmax, st.N());
  for (int n = 1; n <= top; ++n) {
    const auto i = static_cast<std::size_t>(n);
    Real worst(st.precision);
    // Opposite parities are orthogonal exactly; only same-parity pairs carry rounding.
    for (int m = n % 2; m < n; m += 2) {
      const auto j = static_cast<std::size_t>(m);
      Real r = abs(st.inner_with_Q(st.Q[j], n)) / sqrt(st.khat[i] * st.khat[j]);
      worst = max(worst, r);
    }
    rep.add(make("sobolev.orthogonality", params, n, worst));
  }
  return rep;
}

namespace {

void lambda2_zero_suite(VerifyReport& rep, const SobolevTable& st, const ConnectionTable& conn,
                        const FreudTable& freud, int nmax) {
  const std::string params = st.params.to_string();
  const int N = std::min(st.N(), freud.n_max());
  const int top = std::min(nmax, N);
  const std::vector<Poly> P = p_coefficients_all(freud, N);
  const auto& c = freud.c;
  const auto& Q = st.Q;
  auto A = [&](int n) -> const Real& { return need(ConnectionTable::at(conn.a, n), "a", n); };
  auto B = [&](int n) -> const Real& { return need(ConnectionTable::at(conn.b, n), "b", n); };
  auto C = [&](int n) -> const Real& { return c[static_cast<std::size_t>(n)]; };

  for (int n = 1; n + 1 <= top; ++n) {
    const auto i = static_cast<std::size_t>(n);
    Poly rhs = Q[i + 1] + Q[i - 1].scaled(A(n));
    rep.add(make("zero.relation_xP", params, n, relative_poly_residual(P[i].times_x(), rhs)));
    Poly rhs2 = P[i + 1] + P[i - 1].scaled(B(n));
    rep.add(make("zero.relation_xQ", params, n, relative_poly_residual(Q[i].times_x(), rhs2)));
  }
  for (int n = 1; n + 2 <= top; ++n) {
    Real lhs = C(n + 2) * C(n + 1) / A(n + 2) + A(n);
    rep.add(make("zero.a_recurrence", params, n, relative_difference(lhs, C(n + 1) + C(n))));
  }
  for (int n = 1; n + 1 <= top; ++n) {
    rep.add(make("zero.ab_product", params, n, relative_difference(A(n + 1) * B(n), C(n + 1) * C(n))));
  }

  // Integral of Q_{2m+1}(x)/x against the weight, from moments, against
  // 2 Gamma(5/4) (-1)^m prod_{k=1}^m a_{2k}.
  const Precision p = std::max(st.precision, freud.precision);
  const MomentTable mom(std::max(0, 2 * (top / 2)), p);
  const Real two_gamma_54 = gamma_quarter(5, p) * 2;
  Real prod(1, p);
  for (int m = 1; m <= 10 && 2 * m + 1 <= top; ++m) {
    prod *= A(2 * m);
    const Poly g = Q[static_cast<std::size_t>(2 * m + 1)].divided_by_x();
    Real integral(p);
    for (int i = 0; i <= g.degree(); i += 2) integral += g[i] * mom(i);
    Real expected = two_gamma_54 * prod;
    if (m % 2) expected = -expected;
    rep.add(make("zero.odd_moment_integral", params, m, relative_difference(integral, expected)));
    if (m == 1) {
      Check v = make("zero.odd_moment_value_m1", params, 1, abs(integral + Real::from_string("0.7281664", p)));
      v.verdict = v.residual <= Real::from_string("1e-5", p);
      v.note = "integral " + integral.to_string(10) + " vs -0.7281664 +- 1e-5";
      rep.add(std::move(v));
    }
  }

  // Q_{2m}(0) from the connection relation at x = 0 with n = 2m-1.
  for (int m = 1; 2 * m <= top; ++m) {
    const Real& q = Q[static_cast<std::size_t>(2 * m)][0];
    const Real& q_prev = Q[static_cast<std::size_t>(2 * m - 2)][0];
    rep.add(make("zero.q2m_at_zero", params, m, relative_difference(q, -(A(2 * m - 1) * q_prev))));
    if (ConnectionTable::at(conn.a, 2 * m)) {
      rep.add(make("zero.q2m_at_zero_index_2m", params, m, relative_difference(q, -(A(2 * m) * q_prev)),
                   false, "factor a_{2m} instead of a_{2m-1}"));
    }
  }
}

void lambda2_pos_suite(VerifyReport& rep, const SobolevTable& st, const ConnectionTable& conn,
                       const FreudTable& freud, int nmax) {
  const std::string params = st.params.to_string();
  const int N = std::min(st.N(), freud.n_max());
  const int top = std::min(nmax, N);
  const std::vector<Poly> P = p_coefficients_all(freud, N);
  const auto& Q = st.Q;
  const Precision p = std::max(st.precision, freud.precision);
  auto get = [&](const std::vector<std::optional<Real>>& s, const char* what, int n) -> const Real& {
    return need(ConnectionTable::at(s, n), what, n);
  };
  auto A = [&](int n) -> const Real& { return get(conn.a, "a", n); };
  auto B = [&](int n) -> const Real& { return get(conn.b, "b", n); };
  auto Al = [&](int n) -> const Real& { return get(conn.alpha, "alpha", n); };
  auto S = [&](int n) -> const Real& { return get(conn.sigma, "sigma", n); };
  auto D = [&](int n) -> const Real& { return get(conn.delta, "delta", n); };
  auto C = [&](int n) -> const Real& { return freud.c[static_cast<std::size_t>(n)]; };

  for (int n = 1; 2 * n <= top; ++n) {
    const auto i = static_cast<std::size_t>(n);
    Poly rhs = Q[2 * i] + Q[2 * i - 2].scaled(A(n));
    rep.add(make("pos.relation_xP_odd", params, n, relative_poly_residual(P[2 * i - 1].times_x(), rhs)));
  }
  for (int n = 0; n + 2 <= top; ++n) {
    const auto i = static_cast<std::size_t>(n);
    Poly rhs = Q[i + 2] + Q[i].scaled(B(n));
    if (n >= 2) rhs += Q[i - 2].scaled(Al(n));
    rep.add(make("pos.relation_x2P", params, n, relative_poly_residual(P[i].times_x2(), rhs)));
    Poly rhs2 = P[i + 2] + P[i].scaled(S(n));
    if (n >= 2) rhs2 += P[i - 2].scaled(D(n));
    rep.add(make("pos.relation_x2Q", params, n, relative_poly_residual(Q[i].times_x2(), rhs2)));
  }
  for (int n = 1; 2 * n + 1 <= top; ++n) {
    if (!ConnectionTable::at(conn.a, n + 1)) break;
    Real lhs = C(2 * n + 1) * C(2 * n) / A(n + 1) + A(n);
    rep.add(make("pos.a_recurrence", params, n, relative_difference(lhs, C(2 * n) + C(2 * n - 1))));
  }
  for (int n = 1; n + 4 <= top; ++n) {
    Real lhs = C(n + 2) * C(n + 1) + C(n) * C(n - 1);
    Real s = C(n + 1) + C(n);
    lhs += s * s;
    Real rhs = C(n + 4) * C(n + 3) * C(n + 2) * C(n + 1) / Al(n + 4) + B(n) * B(n) * C(n + 2) * C(n + 1) / Al(n + 2);
    if (n >= 2) rhs += Al(n);
    rep.add(make("pos.alpha_sum", params, n, relative_difference(lhs, rhs), true,
                 n < 2 ? "alpha_n term absent" : ""));
  }
  for (int n = 2; n <= top; ++n) {
    Real rhs = Real(n, p) / (4 * C(n)) + C(n - 2) - B(n - 2);
    rep.add(make("pos.sigma_from_b", params, n, relative_difference(S(n), rhs)));
  }
  for (int n = 1; n + 2 <= top; ++n) {
    Real rhs = Real(2 * n + 1, p) / 4;
    Real tail = B(n) * S(n);
    if (n >= 2) tail += Al(n);
    Real lhs = C(n + 2) * C(n + 1) * S(n + 2) / B(n + 2) + tail;
    rep.add(make("pos.sigma_recurrence", params, n, relative_difference(lhs, rhs), true,
                 n < 2 ? "alpha_n term absent" : ""));
    Real lhs_alt = C(n + 2) * C(n + 1) * S(n + 2) / Al(n + 2) + tail;
    rep.add(make("pos.sigma_recurrence_alt", params, n, relative_difference(lhs_alt, rhs), false,
                 "sigma_{n+2}/alpha_{n+2} in place of sigma_{n+2}/b_{n+2}"));
  }
  for (int n = 2; n <= top; ++n) {
    Real rhs = D(n) * B(n) / (C(n) * C(n - 1));
    rep.add(make("pos.sigma_from_d", params, n, relative_difference(S(n), rhs)));
  }
}

}  // namespace

VerifyReport identity_residuals(const SobolevTable& st, const ConnectionTable& conn,
                                const FreudTable& freud, int nmax) {
  VerifyReport rep;
  if (conn.kind == ConnectionCase::lambda2_zero) {
    lambda2_zero_suite(rep, st, conn, freud, nmax);
  } else {
    lambda2_pos_suite(rep, st, conn, freud, nmax);
  }
  return rep;
}

VerifyReport fast_path_residuals(const SobolevTable& st, const FreudTable& freud, int nmax) {
  VerifyReport rep;
  const std::string params = st.params.to_string();
  const int top = std::min({nmax, st.N(), freud.n_max()});
  if (top < 1) return rep;
  const FastConnection fast = khat_recurrence_lambda2zero(top, st.params.mass(0, st.precision), freud);
  const ConnectionTable gs = connection_zero(st, freud);
  for (int n = 0; n <= top; ++n) {
    const auto i = static_cast<std::size_t>(n);
    rep.add(make("fast.khat", params, n, relative_difference(fast.khat[i], st.khat[i])));
    if (n >= 1) {
      rep.add(make("fast.a", params, n, relative_difference(*fast.conn.a[i], *gs.a[i])));
      rep.add(make("fast.b", params, n, relative_difference(*fast.conn.b[i], *gs.b[i])));
    }
  }
  return rep;
}

VerifyReport decoupling_residuals(const SobolevTable& st, const FreudTable& freud, int nmax) {
  VerifyReport rep;
  if (st.params.r() > 1) return rep;
  const std::string params = st.params.to_string();
  const int top = std::min({nmax, st.N(), freud.n_max()});
  const Precision p = st.precision;
  const Real tol = Real::pow2(-p.bits / 2, p);
  const SobolevTable even = gram_schmidt_Q(top, SobolevParams({st.params.mass(0, p)}), p, tol);
  const Real lambda1 = st.params.mass(1, p);
  std::vector<Poly> odd_ref;
  const bool odd_is_p = lambda1.is_zero();
  if (odd_is_p) {
    odd_ref = p_coefficients_all(freud, top);
  } else {
    odd_ref = gram_schmidt_Q(top, SobolevParams({Real(p), lambda1}), p, tol).Q;
  }
  for (int n = 0; n <= top; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Poly& ref = (n % 2 == 0) ? even.Q[i] : odd_ref[i];
    rep.add(make("sobolev.decoupling", params, n, relative_poly_residual(st.Q[i], ref), true,
                 n % 2 == 0 ? "even Q vs lambdas={lambda0}"
                            : (odd_is_p ? "odd Q vs P" : "odd Q vs lambdas={0,lambda1}")));
  }
  return rep;
}

VerifyReport identity_suite(const SobolevTable& st, const FreudTable& freud, int nmax) {
  VerifyReport rep = freud_residuals(freud, nmax);
  rep.append(orthogonality_residuals(st, nmax));
  if (st.params.derivative_masses_zero()) {
    rep.append(identity_residuals(st, connection_zero(st, freud), freud, nmax));
    rep.append(fast_path_residuals(st, freud, nmax));
  }
  if (st.params.x2_self_adjoint() && st.params.r() == 1) {
    rep.append(identity_residuals(st, connection_pos(st, freud), freud, nmax));
  }
  if (st.params.r() <= 1) rep.append(decoupling_residuals(st, freud, nmax));
  return rep;
}

}  // namespace freudlab
