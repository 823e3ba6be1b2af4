#include "freudlab/zeros.hpp"

#include <algorithm>

#include "freudlab/error.hpp"
#include "freudlab/tridiag.hpp"

namespace freudlab {

const char* to_string(Interlace v) {
  switch (v) {
    case Interlace::strict: return "strict";
    case Interlace::violated: return "violated";
    case Interlace::degenerate: return "degenerate";
  }
  return "?";
}

std::vector<Real> ZeroReport::positive() const {
  std::vector<Real> out;
  for (const auto& z : zeros) {
    if (z.sign() > 0) out.push_back(z);
  }
  return out;
}

bool ZeroReport::strictly_interlaces() const {
  return !interlace.empty() &&
         std::all_of(interlace.begin(), interlace.end(), [](Interlace v) { return v == Interlace::strict; });
}

bool ZeroReport::degenerate() const {
  return !interlace.empty() &&
         std::all_of(interlace.begin(), interlace.end(), [](Interlace v) { return v == Interlace::degenerate; });
}

bool ZeroReport::separated() const {
  if (zeros.size() < 2) return true;
  Real r(zeros.front().precision());
  for (const auto& x : radii) r = max(r, x);
  for (std::size_t i = 1; i < zeros.size(); ++i) {
    if (!(zeros[i] - zeros[i - 1] > 2 * r)) return false;
  }
  return true;
}

namespace {


// Bisection on [lo, hi] with f(lo), f(hi) of opposite signs.
template <typename F>
std::pair<Real, Real> bisect(const F& f, Real lo, Real hi, int slo, const Real& tol) {
  for (int it = 0; it < 4000; ++it) {
    if (!((hi - lo) / 2 > tol)) break;
    Real mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    const int s = f(mid).sign();
    if (s == 0) return {mid, Real(mid.precision())};
    if (s == slo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return {(lo + hi) / 2, (hi - lo) / 2};
}

void finish(ZeroReport& rep, std::vector<std::pair<Real, Real>> pos, bool zero_at_origin,
            Precision p) {
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
    rep.zeros.push_back(-it->first);
    rep.radii.push_back(it->second);
  }
  if (zero_at_origin) {
    rep.zeros.emplace_back(p);
    rep.radii.emplace_back(p);
  }
  for (auto& z : pos) {
    rep.zeros.push_back(std::move(z.first));
    rep.radii.push_back(std::move(z.second));
  }
  rep.found = static_cast<int>(rep.zeros.size());
  rep.all_real = rep.found == rep.n;
}

Real fujiwara_bound(const Poly& q) {
  const int n = q.degree();
  const Precision p = q.precision();
  Real b(p);
  for (int k = 1; k <= n; ++k) {
    Real a = abs(q[n - k]);
    if (k == n) a /= 2;
    if (a.is_zero()) continue;
    b = max(b, root(a, static_cast<unsigned long>(k)));
  }
  return 2 * b;
}

}  // namespace

ZeroReport zeros_parity_poly(const Poly& q, std::vector<Real> hints, const Real& tol) {
  const int n = q.degree();
  if (n < 0) throw ParameterError("zeros of an empty polynomial");
  const Precision p = std::max(q.precision(), tol.precision());
  ZeroReport rep;
  rep.n = n;
  if (n == 0) {
    rep.all_real = true;
    return rep;
  }
  for (int i = 1 - n % 2; i < n; i += 2) {
    if (!q[i].is_zero()) throw ParameterError("zeros_parity_poly needs a polynomial of definite parity");
  }
  // g = q / x^{n mod 2} is even; search its positive zeros.
  const Poly g = (n % 2) ? q.divided_by_x() : q;
  const int expected = n / 2;
  auto f = [&](const Real& x) { return poly_eval(g, x); };

  const Real bound = fujiwara_bound(q) + 1;
  std::vector<Real> pts;
  pts.emplace_back(p);
  for (auto& h : hints) {
    if (h.sign() > 0 && h < bound) pts.push_back(h.with_precision(p));
  }
  pts.push_back(bound.with_precision(p));

  auto scan = [&](std::vector<Real>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<std::pair<Real, Real>> roots;
    Real prev_x = xs.front();
    int prev_s = f(prev_x).sign();
    for (std::size_t i = 1; i < xs.size(); ++i) {
      const int s = f(xs[i]).sign();
      if (s == 0) {
        roots.emplace_back(xs[i], Real(p));
        // Step past the exact zero; the next interval starts from its sign.
        prev_x = xs[i];
        prev_s = 0;
        continue;
      }
      if (prev_s != 0 && s != prev_s) roots.push_back(bisect(f, prev_x, xs[i], prev_s, tol));
      prev_x = xs[i];
      prev_s = s;
    }
    return roots;
  };

  std::vector<std::pair<Real, Real>> roots = scan(pts);
  if (static_cast<int>(roots.size()) < expected) {
    std::vector<Real> grid;
    const int cells = 64 * n;
    for (int i = 0; i <= cells; ++i) grid.push_back(bound * i / cells);
    grid.insert(grid.end(), pts.begin(), pts.end());
    std::vector<std::pair<Real, Real>> swept = scan(grid);
    if (swept.size() > roots.size()) roots = std::move(swept);
    rep.note = "uniform sweep fallback used";
  }
  finish(rep, std::move(roots), n % 2 == 1, p);
  if (!rep.all_real) {
    rep.note += (rep.note.empty() ? "" : "; ") + std::to_string(rep.found) + " of " +
                std::to_string(n) + " zeros certified real";
  }
  return rep;
}

ZeroReport zeros_P(const FreudTable& freud, int n, const Real& tol) {
  if (n < 1 || n > freud.n_max()) throw RangeError("zeros_P index " + std::to_string(n));
  const Precision p = freud.precision;
  std::vector<Real> diag(static_cast<std::size_t>(n), Real(p));
  std::vector<Real> off;
  for (int j = 1; j < n; ++j) off.push_back(sqrt(freud.c[static_cast<std::size_t>(j)]));
  std::vector<Real> eig = symtridiag_eigen(diag, off, tol);

  auto f = [&](const Real& x) { return eval_P(freud, n, x); };
  // Symmetric spectrum: the floor(n/2) largest eigenvalues are the positive zeros.
  std::sort(eig.begin(), eig.end(), [](const Real& a, const Real& b) { return b < a; });
  eig.resize(static_cast<std::size_t>(n / 2), Real(p));
  std::vector<std::pair<Real, Real>> pos;
  for (const auto& e : eig) {
    // Widen a bracket around the eigenvalue until P_n changes sign, then bisect.
    Real h = max(tol, Real::pow2(-p.bits / 2, p));
    bool done = false;
    for (int k = 0; k < 200 && !done; ++k, h *= 2) {
      Real lo = e - h;
      Real hi = e + h;
      const int sl = f(lo).sign();
      const int sh = f(hi).sign();
      if (sl == 0) {
        pos.emplace_back(lo, Real(p));
        done = true;
      } else if (sh == 0) {
        pos.emplace_back(hi, Real(p));
        done = true;
      } else if (sl != sh) {
        pos.push_back(bisect(f, lo, hi, sl, tol));
        done = true;
      }
    }
    if (!done) throw IterationError("no sign change of P_n near an eigenvalue", static_cast<int>(pos.size()));
  }
  ZeroReport rep;
  rep.n = n;
  finish(rep, std::move(pos), n % 2 == 1, p);
  return rep;
}

ZeroReport zeros_Q(const SobolevTable& st, const FreudTable& freud, int n, const Real& tol) {
  if (n < 0 || n > st.N()) throw RangeError("zeros_Q index " + std::to_string(n));
  std::vector<Real> hints;
  for (int m = n - 1; m <= n + 1; ++m) {
    if (m < 1 || m > freud.n_max()) continue;
    ZeroReport zp = zeros_P(freud, m, tol);
    for (auto& z : zp.zeros) {
      if (z.sign() > 0) hints.push_back(std::move(z));
    }
  }
  return zeros_parity_poly(st.Q[static_cast<std::size_t>(n)], std::move(hints), tol);
}

std::vector<Interlace> interlace_verdicts(const std::vector<Real>& u, const std::vector<Real>& v,
                                          const Real& tol) {
  std::vector<Interlace> out(u.size(), Interlace::violated);
  const Real band = tol * 100;
  if (u.size() == v.size()) {
    // Orientation fixed by the first non-degenerate pair.
    int orient = 0;
    for (std::size_t k = 0; k < u.size() && orient == 0; ++k) {
      if (abs(u[k] - v[k]) > band) orient = u[k] < v[k] ? -1 : 1;
    }
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (abs(u[k] - v[k]) <= band) {
        out[k] = Interlace::degenerate;
        continue;
      }
      const int o = u[k] < v[k] ? -1 : 1;
      const Real& low = min(u[k], v[k]);
      bool ok = o == orient;
      if (k > 0 && !(max(u[k - 1], v[k - 1]) < low)) ok = false;
      out[k] = ok ? Interlace::strict : Interlace::violated;
    }
  } else if (u.size() == v.size() + 1) {
    for (std::size_t k = 0; k < u.size(); ++k) {
      bool ok = true;
      if (k > 0 && !(v[k - 1] < u[k])) ok = false;
      if (k < v.size() && !(u[k] < v[k])) ok = false;
      bool touch = (k > 0 && abs(v[k - 1] - u[k]) <= band) || (k < v.size() && abs(u[k] - v[k]) <= band);
      out[k] = touch ? Interlace::degenerate : (ok ? Interlace::strict : Interlace::violated);
    }
  }
  return out;
}

ZeroReport interlacing_report(const SobolevTable& st, const FreudTable& freud, int n,
                              const Real& tol) {
  ZeroReport rep = zeros_Q(st, freud, n, tol);
  const ZeroReport zp = zeros_P(freud, n, tol);
  std::vector<Real> u = rep.positive();
  std::vector<Real> v = zp.positive();
  rep.interlace = interlace_verdicts(u, v, tol);
  if (!u.empty() && !v.empty()) rep.outer_beyond_reference = u.back() > v.back();
  rep.reference = std::move(v);
  if (!rep.all_real) rep.interlace.assign(rep.interlace.size(), Interlace::violated);
  return rep;
}

VerifyReport normalized_x2_recurrence_check(const SobolevTable& st, const FreudTable& freud,
                                            int nmax, const Real& tol) {
  if (!st.params.x2_self_adjoint()) {
    throw ParameterError("the x^2 recurrence needs no mass on derivatives of order >= 2");
  }
  VerifyReport rep;
  const std::string params = st.params.to_string();
  const int N = st.N();
  const Precision p = st.precision;
  const MomentTable mom(2 * N + 4, p);
  auto nrm = [&](int n) { return sqrt(st.khat[static_cast<std::size_t>(n)]); };
  auto hat = [&](int n) { return st.Q[static_cast<std::size_t>(n)].scaled(1L / nrm(n)); };

  std::vector<Real> A;
  for (int n = 0; n + 2 <= N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    Poly x2q = st.Q[i].times_x2();
    A.push_back(st.inner_with_Q(x2q, n + 2) / (nrm(n) * nrm(n + 2)));
  }
  for (int n = 0; n <= std::min(nmax, N - 2); ++n) {
    const auto i = static_cast<std::size_t>(n);
    Poly lhs = hat(n).times_x2();
    Real B = st.inner_with_Q(st.Q[i].times_x2(), n) / st.khat[i];
    Poly rhs = hat(n + 2).scaled(A[i]) + hat(n).scaled(B);
    if (n >= 2) rhs += hat(n - 2).scaled(A[i - 2]);
    Check c;
    c.name = "x2rec.residual";
    c.params = params;
    c.n = n;
    c.residual = relative_poly_residual(lhs, rhs);
    rep.add(c);

    Real cross = sobolev_inner(st.Q[i + 2].times_x2(), st.Q[i], st.params, mom) / (nrm(n) * nrm(n + 2));
    Check s;
    s.name = "x2rec.symmetry";
    s.params = params;
    s.n = n;
    s.residual = relative_difference(A[i], cross);
    rep.add(s);
  }
  for (int n = 2; n <= std::min(nmax, N); ++n) {
    ZeroReport zn = zeros_Q(st, freud, n, tol);
    ZeroReport zm = zeros_Q(st, freud, n - 2, tol);
    std::vector<Interlace> v = interlace_verdicts(zn.positive(), zm.positive(), tol);
    bool ok = zn.all_real && zm.all_real &&
              std::all_of(v.begin(), v.end(), [](Interlace x) { return x == Interlace::strict; });
    Check c;
    c.name = "x2rec.zero_interlacing";
    c.params = params;
    c.n = n;
    c.residual = Real(p);
    c.verdict = ok;
    c.note = "zeros of Q_n against Q_{n-2}";
    rep.add(c);
  }
  return rep;
}

}  // namespace freudlab
