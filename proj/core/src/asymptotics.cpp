#include "freudlab/asymptotics.hpp"

#include <algorithm>
#include <numeric>

#include "freudlab/error.hpp"

namespace freudlab {

Complex phi(const Complex& z) {
  const Precision p = z.precision();
  const Real eps = Real::epsilon(p) * 4;
  if (abs(z.im) <= eps * max(Real(1, p), abs(z.re)) && abs(z.re) <= 1) {
    throw DomainError("phi is undefined on the cut [-1, 1]: z = " + z.re.to_string(20));
  }
  Complex s = sqrt(z * z - 1L);
  Complex w = z + s;
  // Principal sqrt picks the wrong sheet on part of the plane; the other
  // root z - s is 1/w, so keep whichever lies outside the unit circle.
  if (abs(w) < 1) w = z - s;
  return w;
}

Real scaled_cut_endpoint(Precision p) { return root(Real(4, p) / 3, 4); }

namespace {

Complex u_of(const Complex& x) { return x * root(Real(3, x.precision()) / 4, 4); }

}  // namespace

Complex ratio_target(const Complex& x, int r) {
  if (r < 0) throw ParameterError("ratio_target needs r >= 0");
  const Precision p = x.precision();
  const Complex f = phi(u_of(x));
  Complex t = x * f * root(Real(12, p), 4);
  t /= f * f + 1L;
  return pow(t, r + 1);
}

Complex p_ratio_limit_target(const Complex& x) {
  const Complex f = phi(u_of(x));
  return Complex(root(Real(12, x.precision()), 4)) / f;
}

namespace {

Complex scaled_point(int n, const Complex& x) {
  const Real s = root(Real(n, x.precision()), 4);
  return x * s;
}

}  // namespace

RatioSample empirical_ratio(int n, const Complex& x, const QFamily& q, const FreudTable& freud) {
  if (n < 1) throw ParameterError("empirical_ratio needs n >= 1");
  const Complex y = scaled_point(n, x);
  const Complex pv = eval_P(freud, n, y);
  const Complex qv = q(n, y);
  if (abs(qv) <= abs(pv) * Real::epsilon(freud.precision)) {
    throw PoleError("Q_" + std::to_string(n) + " vanishes at x = " + x.re.to_string(12) + " + " +
                    x.im.to_string(12) + "i");
  }
  RatioSample s;
  s.x = x;
  s.n = n;
  s.params = q.params().to_string();
  s.empirical = pv / qv;
  const int r = std::max(0, q.params().r());
  s.target = ratio_target(x, r);
  s.abs_error = abs(s.empirical - s.target);
  return s;
}

RatioSample p_ratio_sample(int n, const Complex& x, const FreudTable& freud) {
  if (n < 1) throw ParameterError("p_ratio_sample needs n >= 1");
  const Complex y = scaled_point(n, x);
  const Complex pn = eval_P(freud, n, y);
  if (abs(pn).is_zero()) throw PoleError("P_" + std::to_string(n) + " vanishes at the sample point");
  RatioSample s;
  s.x = x;
  s.n = n;
  s.params = "freud";
  s.empirical = eval_P(freud, n - 1, y) * root(Real(n, freud.precision), 4) / pn;
  s.target = p_ratio_limit_target(x);
  s.abs_error = abs(s.empirical - s.target);
  return s;
}

std::optional<Real> LimitDiagnostics::deviation_at(int n) const {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].first == n) return deviations[i];
  }
  return std::nullopt;
}

int LimitDiagnostics::largest_index() const {
  int m = -1;
  for (const auto& s : samples) m = std::max(m, s.first);
  return m;
}

namespace {

LimitDiagnostics make_diag(std::string name, Real limit) {
  LimitDiagnostics d;
  d.name = std::move(name);
  d.limit = std::move(limit);
  return d;
}

void push(LimitDiagnostics& d, int n, Real v) {
  d.deviations.push_back(abs(v - d.limit));
  d.samples.emplace_back(n, std::move(v));
}

}  // namespace

LimitDiagnostics c_limit_diagnostics(const FreudTable& freud, const std::vector<int>& ns) {
  const Precision p = freud.precision;
  const Real sqrt3 = sqrt(Real(3, p));
  LimitDiagnostics d = make_diag("c_n/sqrt(n)", 1L / (2 * sqrt3));
  for (int n : ns) {
    if (n < 1 || n > freud.n_max()) continue;
    push(d, n, freud.c[static_cast<std::size_t>(n)] / sqrt(Real(n, p)));
  }
  return d;
}

std::vector<LimitDiagnostics> limit_diagnostics(const ConnectionTable& conn, const FreudTable& freud,
                                                const std::vector<int>& ns) {
  const Precision p = freud.precision;
  const Real sqrt3 = sqrt(Real(3, p));
  const Real ell = 1L / (2 * sqrt3);
  std::vector<LimitDiagnostics> out;
  out.push_back(c_limit_diagnostics(freud, ns));

  auto value = [&](const std::vector<std::optional<Real>>& s, int n) -> const std::optional<Real>& {
    return ConnectionTable::at(s, n);
  };
  auto C = [&](int n) -> std::optional<Real> {
    if (n < 1 || n > freud.n_max()) return std::nullopt;
    return freud.c[static_cast<std::size_t>(n)];
  };

  if (conn.kind == ConnectionCase::lambda2_zero) {
    LimitDiagnostics a = make_diag("a_n/sqrt(n)", ell);
    LimitDiagnostics b = make_diag("b_n/sqrt(n)", ell);
    LimitDiagnostics kr = make_diag("khat_n/k_n", Real(1, p));
    for (int n : ns) {
      const Real rn = sqrt(Real(n, p));
      if (const auto& v = value(conn.a, n)) push(a, n, *v / rn);
      if (const auto& v = value(conn.b, n)) {
        push(b, n, *v / rn);
        if (auto c = C(n)) push(kr, n, *v / *c);
      }
    }
    out.push_back(std::move(a));
    out.push_back(std::move(b));
    out.push_back(std::move(kr));
  } else {
    LimitDiagnostics a = make_diag("a_n/sqrt(2n)", ell);
    LimitDiagnostics b = make_diag("b_n/sqrt(n)", 1L / sqrt3);
    LimitDiagnostics al = make_diag("alpha_n/n", Real(1, p) / 12);
    LimitDiagnostics sg = make_diag("sigma_n/sqrt(n)", 1L / sqrt3);
    LimitDiagnostics de = make_diag("delta_n/n", Real(1, p) / 12);
    LimitDiagnostics kr = make_diag("khat_n/k_n", Real(1, p));
    for (int n : ns) {
      if (n < 1) continue;
      const Real rn = sqrt(Real(n, p));
      if (const auto& v = value(conn.a, n)) push(a, n, *v / sqrt(Real(2 * n, p)));
      if (const auto& v = value(conn.b, n)) push(b, n, *v / rn);
      if (const auto& v = value(conn.alpha, n)) push(al, n, *v / n);
      if (const auto& v = value(conn.sigma, n)) push(sg, n, *v / rn);
      if (const auto& v = value(conn.delta, n)) push(de, n, *v / n);
      const auto& s = value(conn.sigma, n);
      const auto& bb = value(conn.b, n);
      if (s && bb) push(kr, n, *s / *bb);
    }
    for (auto* d : {&a, &b, &al, &sg, &de, &kr}) out.push_back(std::move(*d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact arithmetic in Q(sqrt 3) for the quartic behind the b_n limit.

namespace {

struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n, long long d = 1) : num(n), den(d) { normalize(); }
  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(Rat a, Rat b) { return Rat(a.num * b.den, a.den * b.num); }
  friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
  int sign() const { return (num > 0) - (num < 0); }
};

// a + b sqrt3.
struct QS3 {
  Rat a, b;
  friend QS3 operator+(QS3 x, QS3 y) { return {x.a + y.a, x.b + y.b}; }
  friend QS3 operator-(QS3 x, QS3 y) { return {x.a - y.a, x.b - y.b}; }
  friend QS3 operator*(QS3 x, QS3 y) { return {x.a * y.a + Rat(3) * x.b * y.b, x.a * y.b + x.b * y.a}; }
  friend QS3 operator/(QS3 x, QS3 y) {
    // Multiply by the conjugate a - b sqrt3.
    const Rat n = y.a * y.a - Rat(3) * y.b * y.b;
    QS3 t = x * QS3{y.a, Rat(0) - y.b};
    return {t.a / n, t.b / n};
  }
  friend bool operator==(QS3 x, QS3 y) { return x.a == y.a && x.b == y.b; }
  bool zero() const { return a.num == 0 && b.num == 0; }
  // Sign of a + b sqrt3 decided exactly: compare a^2 with 3 b^2.
  int sign() const {
    const int sa = a.sign(), sb = b.sign();
    if (sa == sb || sb == 0) return sa;
    if (sa == 0) return sb;
    const Rat d = a * a - Rat(3) * b * b;
    return d.sign() == 0 ? 0 : (d.sign() > 0 ? sa : sb);
  }
};

using QPoly = std::vector<QS3>;  // index = power of t

QPoly mul(const QPoly& x, const QPoly& y) {
  QPoly r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = r[i + j] + x[i] * y[j];
  return r;
}

QS3 eval(const QPoly& q, const QS3& t) {
  QS3 v;
  for (auto it = q.rbegin(); it != q.rend(); ++it) v = v * t + *it;
  return v;
}

// Synthetic division by (t - root); returns quotient, remainder in rem.
QPoly divide_linear(const QPoly& q, const QS3& root, QS3& rem) {
  QPoly out(q.size() - 1);
  QS3 carry;
  for (std::size_t k = q.size(); k-- > 0;) {
    carry = carry * root + q[k];
    if (k > 0) out[k - 1] = carry;
  }
  rem = carry;
  return out;
}

bool same(const QPoly& x, const QPoly& y) {
  const std::size_t n = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const QS3 a = i < x.size() ? x[i] : QS3{};
    const QS3 b = i < y.size() ? y[i] : QS3{};
    if (!(a == b)) return false;
  }
  return true;
}

Check verdict_check(std::string name, bool ok, bool gating, std::string note) {
  Check c;
  c.name = std::move(name);
  c.params = "exact";
  c.residual = Real(Precision{64});
  c.verdict = ok;
  c.gating = gating;
  c.note = std::move(note);
  return c;
}

}  // namespace

VerifyReport limit_polynomial_checks() {
  VerifyReport rep;
  const QS3 s3{Rat(0), Rat(1)};
  const QS3 inv_s3 = QS3{Rat(1), Rat(0)} / s3;
  const QPoly quartic = {QS3{Rat(1), Rat(0)}, QS3{Rat(0), Rat(-4)}, QS3{Rat(18), Rat(0)},
                         QS3{Rat(0), Rat(-12)}, QS3{Rat(9), Rat(0)}};
  const QPoly lin = {QS3{} - inv_s3, QS3{Rat(1), Rat(0)}};
  QPoly fourth = mul(mul(lin, lin), mul(lin, lin));
  QPoly nine = fourth, ninth = fourth;
  for (auto& v : nine) v = v * QS3{Rat(9), Rat(0)};
  for (auto& v : ninth) v = v * QS3{Rat(1, 9), Rat(0)};
  rep.add(verdict_check("limit_poly.quartic_factor_9", same(quartic, nine), true,
                        "quartic = 9 (t - 1/sqrt3)^4 coefficientwise"));
  rep.add(verdict_check("limit_poly.quartic_factor_1_9", same(quartic, ninth), false,
                        "quartic = (1/9)(t - 1/sqrt3)^4; leading coefficient is 9"));

  // Only real root: the quartic is 9 (t - 1/sqrt3)^4, so deflating four times
  // by (t - 1/sqrt3) must leave the constant 9 with zero remainders.
  QPoly q = quartic;
  bool deflates = true;
  for (int k = 0; k < 4; ++k) {
    QS3 rem;
    q = divide_linear(q, inv_s3, rem);
    deflates = deflates && rem.zero();
  }
  deflates = deflates && q.size() == 1 && q[0] == QS3{Rat(9), Rat(0)};
  rep.add(verdict_check("limit_poly.unique_real_root", deflates, true, "t = 1/sqrt3 with multiplicity 4"));

  // Denominator t (2 sqrt3 - 21 t + 24 sqrt3 t^2 - 36 t^3): deflate the cubic by
  // t - 1/(2 sqrt3) and check the quadratic has negative discriminant.
  const QPoly cubic = {QS3{Rat(0), Rat(2)}, QS3{Rat(-21), Rat(0)}, QS3{Rat(0), Rat(24)},
                       QS3{Rat(-36), Rat(0)}};
  const QS3 ell = QS3{Rat(1), Rat(0)} / QS3{Rat(0), Rat(2)};
  QS3 rem;
  QPoly quad = divide_linear(cubic, ell, rem);
  const QS3 disc = quad[1] * quad[1] - QS3{Rat(4), Rat(0)} * quad[2] * quad[0];
  rep.add(verdict_check("limit_poly.denominator_roots", rem.zero() && disc.sign() < 0 && !eval(cubic, QS3{}).zero(),
                        true, "real roots 0 and 1/(2 sqrt3); remaining pair complex"));
  return rep;
}

PredictionResult prediction_experiment(int r, const SobolevParams& params, const std::vector<int>& ns,
                                       const std::vector<Complex>& xs, const FreudTable& freud,
                                       const Real& tol, GramSchmidtOptions opts) {
  if (r < 2) throw ParameterError("prediction_experiment covers r >= 2");
  if (params.r() != r) throw ParameterError("prediction_experiment needs r + 1 masses");
  if (ns.empty() || xs.empty()) throw ParameterError("prediction_experiment needs a grid");
  const QFamily q(params, freud, ns, tol, opts);

  PredictionResult res;
  std::vector<int> sorted = ns;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& x : xs) {
    std::vector<Real> dev;
    for (int n : sorted) {
      RatioSample s = empirical_ratio(n, x, q, freud);
      dev.push_back(s.abs_error);
      res.samples.push_back(std::move(s));
    }
    Check c;
    c.name = "prediction.trend";
    c.params = params.to_string() + " x=" + x.re.to_string(6) + (x.im.is_zero() ? "" : "+" + x.im.to_string(6) + "i");
    c.n = sorted.back();
    c.residual = dev.back();
    c.verdict = dev.back() < dev.front() || dev.front().is_zero();
    c.gating = true;
    int ups = 0;
    for (std::size_t i = 1; i < dev.size(); ++i) ups += dev[i] > dev[i - 1];
    c.note = "conjecture: deviation at n=" + std::to_string(sorted.front()) + " is " + dev.front().to_string(6) +
             ", at n=" + std::to_string(sorted.back()) + " is " + dev.back().to_string(6) + "; " +
             std::to_string(ups) + " increasing steps";
    res.trends.add(std::move(c));
  }
  return res;
}

}  // namespace freudlab
