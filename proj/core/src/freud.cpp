#include "freudlab/freud.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "freudlab/error.hpp"
#include "freudlab/gamma.hpp"
#include "freudlab/tridiag.hpp"

namespace freudlab {

const char* to_string(StringMethod m) {
  return m == StringMethod::forward ? "forward" : "newton";
}

Real FreudTable::string_residual(int n) const {
  if (n < 1 || n + 1 > n_max()) throw RangeError("string residual index " + std::to_string(n));
  const auto i = static_cast<std::size_t>(n);
  return abs(4 * c[i] * (c[i + 1] + c[i] + c[i - 1]) - n);
}

MomentTable::MomentTable(int max_order, Precision p) : precision_(p) {
  if (max_order < 0) throw RangeError("negative moment order");
  mu_.assign(static_cast<std::size_t>(max_order) + 1, Real(p));
  // mu_{m+4} = ((m+1)/4) mu_m.
  if (max_order >= 0) mu_[0] = gamma_quarter(1, p) / 2;
  if (max_order >= 2) mu_[2] = gamma_quarter(3, p) / 2;
  for (int m = 4; m <= max_order; m += 2) {
    mu_[static_cast<std::size_t>(m)] = mu_[static_cast<std::size_t>(m - 4)] * (m - 3) / 4;
  }
}

const Real& MomentTable::operator()(int m) const {
  if (m < 0 || m > max_order()) throw RangeError("moment order " + std::to_string(m));
  return mu_[static_cast<std::size_t>(m)];
}

Real moment(int m, Precision p) {
  if (m < 0) throw RangeError("negative moment order");
  if (m % 2 != 0) return Real(p);
  return gamma_quarter(m + 1, p) / 2;
}

namespace {

std::vector<Real> forward_run(int n_max, Precision p) {
  std::vector<Real> c;
  c.reserve(static_cast<std::size_t>(n_max) + 1);
  c.emplace_back(p);
  c.push_back(gamma_quarter(3, p) / gamma_quarter(1, p));
  for (int n = 1; n < n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    Real next = Real(n, p) / (4 * c[i]) - c[i] - c[i - 1];
    if (next.sign() <= 0) {
      throw PrecisionError("forward string recurrence produced a nonpositive c_n", n + 1);
    }
    c.push_back(std::move(next));
  }
  c.resize(static_cast<std::size_t>(n_max) + 1, Real(p));
  return c;
}

}  // namespace

FreudTable string_forward(int n_max, Precision p) {
  if (n_max < 1) throw ParameterError("string_forward needs n_max >= 1");
  std::vector<Real> lo = forward_run(n_max, p);
  std::vector<Real> hi = forward_run(n_max, Precision{p.bits + 64});

  const Real agree = Real::pow2(-p.bits / 2, p);
  int trusted = 0;
  for (int n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (relative_difference(lo[i], hi[i]) > agree) break;
    trusted = n;
  }

  FreudTable t;
  t.c = std::move(lo);
  t.method = StringMethod::forward;
  t.precision = p;
  t.trusted = trusted;
  return freud_norms(std::move(t));
}

FreudTable string_forward_escalating(int n_max, Precision p, long cap_bits) {
  long bits = p.bits;
  int last_index = 0;
  while (bits <= cap_bits) {
    try {
      FreudTable t = string_forward(n_max, Precision{bits});
      if (t.trusted >= n_max) {
        for (auto& v : t.c) v = v.with_precision(p);
        t.precision = p;
        return freud_norms(std::move(t));
      }
      last_index = t.trusted + 1;
    } catch (const PrecisionError& e) {
      last_index = e.index();
    }
    bits *= 2;
  }
  throw PrecisionError("forward string recurrence exhausted the precision cap", last_index);
}

namespace {

Real infinity_norm(const std::vector<Real>& v, Precision p) {
  Real m(p);
  for (const auto& x : v) m = max(m, abs(x));
  return m;
}

// F_n for n = 1..M with c_0 = 0 and c_{M+1} = tail.
std::vector<Real> string_equations(const std::vector<Real>& c, const Real& tail) {
  const std::size_t m = c.size() - 1;
  std::vector<Real> f(m + 1, Real(tail.precision()));
  for (std::size_t n = 1; n <= m; ++n) {
    const Real& next = (n == m) ? tail : c[n + 1];
    f[n] = 4 * c[n] * (next + c[n] + c[n - 1]) - static_cast<long>(n);
  }
  return f;
}

}  // namespace

FreudTable string_newton(int n_max, Precision p, const Real& tol, NewtonOptions opts) {
  if (n_max < 2) throw ParameterError("string_newton needs n_max >= 2");
  int buffer = opts.buffer;
  if (buffer < 0) {
    // Boundary errors decay like (2 + sqrt 3)^{-distance} into the interior.
    buffer = static_cast<int>(std::ceil(0.5 * static_cast<double>(p.bits) * std::log(2.0) /
                                        std::log(2.0 + std::sqrt(3.0)))) + 10;
  }
  const int m = n_max + buffer;
  const auto mu = static_cast<std::size_t>(m);

  std::vector<Real> c(mu + 1, Real(p));
  for (int n = 1; n <= m; ++n) c[static_cast<std::size_t>(n)] = sqrt(Real(n, p) / 12);
  const Real tail = sqrt(Real(m + 1, p) / 12);

  std::vector<Real> f = string_equations(c, tail);
  Real fnorm = infinity_norm(f, p);
  bool polished = false;

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    const bool converged = fnorm <= tol;
    if (converged && polished) break;

    // Tridiagonal Jacobian: sub = super = 4 c_n, diag = 4 (c_{n+1} + 2 c_n + c_{n-1}).
    // Thomas algorithm on J delta = -F.
    std::vector<Real> cp(mu + 1, Real(p));
    std::vector<Real> dp(mu + 1, Real(p));
    for (std::size_t n = 1; n <= mu; ++n) {
      const Real& next = (n == mu) ? tail : c[n + 1];
      Real diag = 4 * (next + 2 * c[n] + c[n - 1]);
      Real off = 4 * c[n];
      Real rhs = -f[n];
      if (n > 1) {
        Real lower = 4 * c[n];
        diag -= lower * cp[n - 1];
        rhs -= lower * dp[n - 1];
      }
      if (diag.is_zero()) throw IterationError("singular Newton Jacobian", static_cast<int>(n));
      cp[n] = off / diag;
      dp[n] = rhs / diag;
    }
    std::vector<Real> delta(mu + 1, Real(p));
    delta[mu] = dp[mu];
    for (std::size_t n = mu - 1; n >= 1; --n) delta[n] = dp[n] - cp[n] * delta[n + 1];

    Real step(1, p);
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving) {
      std::vector<Real> trial = c;
      bool positive = true;
      for (std::size_t n = 1; n <= mu; ++n) {
        trial[n] += step * delta[n];
        if (trial[n].sign() <= 0) positive = false;
      }
      if (positive) {
        std::vector<Real> ft = string_equations(trial, tail);
        Real tnorm = infinity_norm(ft, p);
        if (tnorm < fnorm || (converged && tnorm <= fnorm)) {
          c = std::move(trial);
          f = std::move(ft);
          fnorm = std::move(tnorm);
          accepted = true;
          break;
        }
      }
      if (converged) break;
      step /= 2;
    }
    if (converged) {
      // One polishing step after the tolerance is met; keep the result either way.
      polished = true;
      continue;
    }
    if (!accepted) {
      throw IterationError("Newton stagnated on the string equations, residual " + fnorm.to_string(6),
                           iter);
    }
  }
  if (fnorm > tol) {
    throw IterationError("Newton did not reach tolerance, residual " + fnorm.to_string(6),
                         opts.max_iterations);
  }

  c.resize(static_cast<std::size_t>(n_max) + 1, Real(p));
  FreudTable t;
  t.c = std::move(c);
  t.method = StringMethod::newton;
  t.precision = p;
  t.trusted = n_max;
  return freud_norms(std::move(t));
}

FreudTable freud_norms(FreudTable table) {
  table.k.clear();
  table.k.reserve(table.c.size());
  table.k.push_back(moment(0, table.precision));
  for (std::size_t n = 1; n < table.c.size(); ++n) table.k.push_back(table.c[n] * table.k[n - 1]);
  return table;
}

namespace {

void check_index(const FreudTable& t, int n) {
  if (n < 0 || n > t.n_max()) {
    throw RangeError("P_" + std::to_string(n) + " beyond table of size " + std::to_string(t.n_max()));
  }
}

}  // namespace

Complex eval_P(const FreudTable& t, int n, const Complex& x) {
  check_index(t, n);
  Complex prev(Real(1, std::max(t.precision, x.precision())));
  if (n == 0) return prev;
  Complex cur = x;
  for (int m = 1; m < n; ++m) {
    Complex next = x * cur;
    next -= prev * t.c[static_cast<std::size_t>(m)];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Real eval_P(const FreudTable& t, int n, const Real& x) {
  check_index(t, n);
  Real prev(1, std::max(t.precision, x.precision()));
  if (n == 0) return prev;
  Real cur = x;
  for (int m = 1; m < n; ++m) {
    Real next = x * cur - t.c[static_cast<std::size_t>(m)] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Real> eval_P_all(const FreudTable& t, int n, const Real& x) {
  check_index(t, n);
  std::vector<Real> v;
  v.reserve(static_cast<std::size_t>(n) + 1);
  v.emplace_back(1, std::max(t.precision, x.precision()));
  if (n >= 1) v.push_back(x);
  for (int m = 1; m < n; ++m) {
    const auto i = static_cast<std::size_t>(m);
    v.push_back(x * v[i] - t.c[i] * v[i - 1]);
  }
  return v;
}

std::vector<Poly> p_coefficients_all(const FreudTable& t, int n) {
  check_index(t, n);
  std::vector<Poly> ps;
  ps.reserve(static_cast<std::size_t>(n) + 1);
  ps.push_back(Poly::monomial(0, t.precision));
  if (n >= 1) ps.push_back(Poly::monomial(1, t.precision));
  for (int m = 1; m < n; ++m) {
    const auto i = static_cast<std::size_t>(m);
    Poly next = ps[i].times_x();
    next -= ps[i - 1].scaled(t.c[i]);
    next.parity = parity_of_degree(m + 1);
    ps.push_back(std::move(next));
  }
  return ps;
}

Poly p_coefficients(const FreudTable& t, int n) {
  std::vector<Poly> all = p_coefficients_all(t, n);
  return std::move(all.back());
}

Real d_coeff(const FreudTable& t, int n) {
  if (n < 3) throw RangeError("d_n needs n >= 3");
  check_index(t, n);
  const auto i = static_cast<std::size_t>(n);
  return 4 * t.c[i] * t.c[i - 1] * t.c[i - 2];
}

GaussRule gauss_freud(const FreudTable& t, int n, const Real& tol) {
  if (n < 1) throw ParameterError("gauss_freud needs n >= 1");
  check_index(t, n);
  std::vector<Real> diag(static_cast<std::size_t>(n), Real(t.precision));
  std::vector<Real> off;
  off.reserve(static_cast<std::size_t>(n) - 1);
  for (int j = 1; j < n; ++j) off.push_back(sqrt(t.c[static_cast<std::size_t>(j)]));

  GaussRule rule;
  rule.nodes = symtridiag_eigen(diag, off, tol);
  rule.weights.reserve(rule.nodes.size());
  for (const auto& x : rule.nodes) {
    std::vector<Real> ps = eval_P_all(t, n - 1, x);
    Real sum(t.precision);
    for (std::size_t j = 0; j < ps.size(); ++j) sum += ps[j] * ps[j] / t.k[j];
    rule.weights.push_back(1L / sum);
  }
  return rule;
}

}  // namespace freudlab
