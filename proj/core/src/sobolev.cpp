#include "freudlab/sobolev.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

#include "freudlab/error.hpp"

namespace freudlab {

SobolevParams::SobolevParams(std::vector<Real> l) : lambdas(std::move(l)) {
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (lambdas[k].sign() < 0) {
      throw ParameterError("negative point mass on derivative " + std::to_string(k));
    }
  }
}

SobolevParams SobolevParams::parse(const std::string& csv, Precision p) {
  std::vector<Real> l;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw ParameterError("empty entry in lambda list '" + csv + "'");
    l.push_back(Real::from_string(item, p));
  }
  if (l.empty()) throw ParameterError("empty lambda list");
  return SobolevParams(std::move(l));
}

Real SobolevParams::mass(int k, Precision p) const {
  if (k < 0 || k > r()) return Real(p);
  return lambdas[static_cast<std::size_t>(k)];
}

bool SobolevParams::all_zero() const {
  return std::all_of(lambdas.begin(), lambdas.end(), [](const Real& l) { return l.is_zero(); });
}

bool SobolevParams::derivative_masses_zero() const {
  for (std::size_t k = 1; k < lambdas.size(); ++k) {
    if (!lambdas[k].is_zero()) return false;
  }
  return true;
}

bool SobolevParams::x2_self_adjoint() const {
  for (std::size_t k = 2; k < lambdas.size(); ++k) {
    if (!lambdas[k].is_zero()) return false;
  }
  return true;
}

std::string SobolevParams::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (k) out += ",";
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.12Rg", lambdas[k].get());
    out += buf;
    mpfr_free_str(buf);
  }
  return out;
}

Real SobolevTable::inner_with_Q(const Poly& p, int j) const {
  if (j < 0 || j > N()) throw RangeError("Q_" + std::to_string(j) + " beyond table");
  if (p.degree() > N()) throw RangeError("polynomial degree exceeds stored monomial products");
  const auto& row = gram[static_cast<std::size_t>(j)];
  Real s(std::max(precision, p.precision()));
  for (int i = j % 2; i <= p.degree(); i += 2) s += p[i] * row[static_cast<std::size_t>(i)];
  return s;
}

const char* to_string(ConnectionCase c) {
  return c == ConnectionCase::lambda2_zero ? "lambda2_zero" : "lambda2_pos";
}

const std::optional<Real>& ConnectionTable::at(const std::vector<std::optional<Real>>& seq, int n) {
  static const std::optional<Real> absent;
  if (n < 0 || n >= static_cast<int>(seq.size())) return absent;
  return seq[static_cast<std::size_t>(n)];
}

namespace {

Real factorial(int k, Precision p) {
  Real f(1, p);
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

Real sobolev_inner(const Poly& p, const Poly& q, const SobolevParams& params,
                   const MomentTable& moments) {
  const Precision prec = std::max({p.precision(), q.precision(), moments.precision()});
  Real s(prec);
  for (int i = 0; i <= p.degree(); ++i) {
    if (p[i].is_zero()) continue;
    Real row(prec);
    for (int j = i % 2; j <= q.degree(); j += 2) {
      if (q[j].is_zero()) continue;
      row += q[j] * moments(i + j);
    }
    s += p[i] * row;
  }
  for (int k = 0; k <= params.r(); ++k) {
    if (k > p.degree() || k > q.degree()) break;
    const Real& lam = params.lambdas[static_cast<std::size_t>(k)];
    if (lam.is_zero()) continue;
    Real f = factorial(k, prec);
    s += lam * f * f * p[k] * q[k];
  }
  return s;
}

Real sobolev_inner(const Poly& p, const Poly& q, const SobolevParams& params) {
  const Precision prec = std::max(p.precision(), q.precision());
  MomentTable moments(std::max(0, p.degree() + q.degree()), prec);
  return sobolev_inner(p, q, params, moments);
}

namespace {

SobolevTable gram_schmidt_run(int N, const SobolevParams& params, Precision p) {
  const MomentTable mom(2 * N, p);
  std::vector<Real> massfac;
  for (int k = 0; k <= params.r(); ++k) {
    Real f = factorial(k, p);
    massfac.push_back(params.lambdas[static_cast<std::size_t>(k)].with_precision(p) * f * f);
  }

  SobolevTable st;
  st.params = params;
  st.precision = p;
  st.Q.reserve(static_cast<std::size_t>(N) + 1);
  st.khat.reserve(static_cast<std::size_t>(N) + 1);
  st.gram.reserve(static_cast<std::size_t>(N) + 1);

  for (int n = 0; n <= N; ++n) {
    Poly v = (n == 0) ? Poly::monomial(0, p) : st.Q.back().times_x();
    const int par = n % 2;
    for (int j = par; j < n; j += 2) {
      const auto& row = st.gram[static_cast<std::size_t>(j)];
      Real proj(p);
      for (int i = par; i <= n; i += 2) {
        if (!v[i].is_zero()) proj += v[i] * row[static_cast<std::size_t>(i)];
      }
      proj /= st.khat[static_cast<std::size_t>(j)];
      const Poly& qj = st.Q[static_cast<std::size_t>(j)];
      for (int i = par; i <= j; i += 2) v[i] -= proj * qj[i];
    }
    v[n] = Real(1, p);
    v.parity = parity_of_degree(n);

    std::vector<Real> row(static_cast<std::size_t>(N) + 1, Real(p));
    for (int i = par; i <= N; i += 2) {
      Real s(p);
      for (int l = par; l <= n; l += 2) s += v[l] * mom(i + l);
      if (i <= n && i < static_cast<int>(massfac.size())) s += massfac[static_cast<std::size_t>(i)] * v[i];
      row[static_cast<std::size_t>(i)] = std::move(s);
    }
    Real kh(p);
    for (int i = par; i <= n; i += 2) kh += v[i] * row[static_cast<std::size_t>(i)];
    if (kh.sign() <= 0) throw PrecisionError("nonpositive Sobolev norm in Gram-Schmidt", n);

    st.Q.push_back(std::move(v));
    st.khat.push_back(std::move(kh));
    st.gram.push_back(std::move(row));
  }
  return st;
}

}  // namespace

SobolevTable gram_schmidt_Q(int N, const SobolevParams& params, Precision prec, const Real& tol,
                            GramSchmidtOptions opts) {
  if (N < 0) throw ParameterError("gram_schmidt_Q needs N >= 0");
  for (const auto& l : params.lambdas) {
    if (l.sign() < 0) throw ParameterError("negative point mass");
  }
  long bits = std::max({prec.bits, 256L, 8L * N});
  if (bits > opts.cap_bits) bits = opts.cap_bits;

  std::optional<SobolevTable> lower;
  int unstable = 0;
  try {
    lower = gram_schmidt_run(N, params, Precision{bits});
  } catch (const PrecisionError& e) {
    unstable = e.index();
  }
  while (2 * bits <= opts.cap_bits) {
    bits *= 2;
    std::optional<SobolevTable> upper;
    try {
      upper = gram_schmidt_run(N, params, Precision{bits});
    } catch (const PrecisionError& e) {
      unstable = e.index();
      lower.reset();
      continue;
    }
    if (lower) {
      bool stable = true;
      for (int n = 0; n <= N && stable; ++n) {
        const auto i = static_cast<std::size_t>(n);
        if (relative_difference(lower->khat[i], upper->khat[i]) > tol) {
          stable = false;
          unstable = n;
        }
      }
      if (stable) return std::move(*upper);
    }
    lower = std::move(upper);
  }
  throw PrecisionError("Gram-Schmidt norms unstable at the precision cap", unstable);
}

FastConnection khat_recurrence_lambda2zero(int N, const Real& lambda0, const FreudTable& freud) {
  if (lambda0.sign() < 0) throw ParameterError("negative point mass");
  if (N < 1) throw ParameterError("khat recurrence needs N >= 1");
  if (N > freud.n_max()) throw RangeError("khat recurrence needs c up to N");
  const auto& c = freud.c;
  const auto& k = freud.k;

  FastConnection out;
  out.khat.reserve(static_cast<std::size_t>(N) + 1);
  out.khat.push_back(k[0] + lambda0);
  out.khat.push_back(k[1]);
  for (int n = 1; n < N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (out.khat[i - 1].sign() <= 0) throw PrecisionError("nonpositive k̂ in fast recurrence", n - 1);
    out.khat.push_back((c[i + 1] + c[i]) * k[i] - k[i] * k[i] / out.khat[i - 1]);
  }
  if (out.khat.back().sign() <= 0) throw PrecisionError("nonpositive k̂ in fast recurrence", N);

  ConnectionTable& conn = out.conn;
  conn.kind = ConnectionCase::lambda2_zero;
  const auto size = static_cast<std::size_t>(N) + 1;
  conn.a.assign(size, std::nullopt);
  conn.b.assign(size, std::nullopt);
  conn.alpha.assign(size, std::nullopt);
  conn.sigma.assign(size, std::nullopt);
  conn.delta.assign(size, std::nullopt);
  for (std::size_t n = 1; n < size; ++n) {
    conn.a[n] = k[n] / out.khat[n - 1];
    conn.b[n] = out.khat[n] / k[n - 1];
  }
  return out;
}

namespace {

template <typename T>
T q_fast(int n, const T& x, const ConnectionTable& conn, const FreudTable& freud) {
  if (conn.kind != ConnectionCase::lambda2_zero) {
    throw ParameterError("q_eval_fast needs the lambda2_zero connection");
  }
  if (n < 0 || n > conn.size() || n > freud.n_max()) {
    throw RangeError("Q_" + std::to_string(n) + " beyond fast table");
  }
  const Precision p = std::max(freud.precision, x.precision());
  T one;
  if constexpr (std::is_same_v<T, Real>) {
    one = Real(1, p);
  } else {
    one = Complex(Real(1, p));
  }
  if (n == 0) return one;
  // Running P_{m-1}, P_m and Q_{m-1}, Q_m.
  T p_prev = one;
  T p_cur = x;
  T q_prev = one;
  T q_cur = x;
  for (int m = 1; m < n; ++m) {
    const auto i = static_cast<std::size_t>(m);
    const auto& am = conn.a[i];
    if (!am) throw RangeError("a_" + std::to_string(m) + " absent");
    T q_next = x;
    q_next *= p_cur;
    q_next -= q_prev * *am;
    T p_next = x;
    p_next *= p_cur;
    p_next -= p_prev * freud.c[i];
    p_prev = std::move(p_cur);
    p_cur = std::move(p_next);
    q_prev = std::move(q_cur);
    q_cur = std::move(q_next);
  }
  return q_cur;
}

}  // namespace

Complex q_eval_fast(int n, const Complex& x, const ConnectionTable& conn, const FreudTable& freud) {
  return q_fast(n, x, conn, freud);
}

Real q_eval_fast(int n, const Real& x, const ConnectionTable& conn, const FreudTable& freud) {
  return q_fast(n, x, conn, freud);
}

ConnectionTable connection_zero(const SobolevTable& st, const FreudTable& freud) {
  if (!st.params.derivative_masses_zero()) {
    throw ParameterError("connection_zero needs lambdas without derivative masses");
  }
  const int N = st.N();
  if (N > freud.n_max()) throw RangeError("Freud table shorter than Sobolev table");
  ConnectionTable conn;
  conn.kind = ConnectionCase::lambda2_zero;
  const auto size = static_cast<std::size_t>(N) + 1;
  conn.a.assign(size, std::nullopt);
  conn.b.assign(size, std::nullopt);
  conn.alpha.assign(size, std::nullopt);
  conn.sigma.assign(size, std::nullopt);
  conn.delta.assign(size, std::nullopt);
  for (std::size_t n = 1; n < size; ++n) {
    conn.a[n] = freud.k[n] / st.khat[n - 1];
    conn.b[n] = st.khat[n] / freud.k[n - 1];
  }
  return conn;
}

ConnectionTable connection_pos(const SobolevTable& st, const FreudTable& freud) {
  if (!st.params.x2_self_adjoint()) {
    throw ParameterError("connection_pos needs no mass on derivatives of order >= 2");
  }
  const int N = st.N();
  if (N > freud.n_max()) throw RangeError("Freud table shorter than Sobolev table");
  const Precision p = std::max(st.precision, freud.precision);
  const MomentTable mom(2 * N + 2, p);
  const std::vector<Poly> P = p_coefficients_all(freud, N);

  ConnectionTable conn;
  conn.kind = ConnectionCase::lambda2_pos;
  const auto size = static_cast<std::size_t>(N) + 1;
  conn.a.assign(size, std::nullopt);
  conn.b.assign(size, std::nullopt);
  conn.alpha.assign(size, std::nullopt);
  conn.sigma.assign(size, std::nullopt);
  conn.delta.assign(size, std::nullopt);

  const auto& k = freud.k;
  const auto& kh = st.khat;
  for (int n = 0; n <= N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    Poly x2p = P[i].times_x2();
    Real num = (x2p.degree() <= N) ? st.inner_with_Q(x2p, n) : sobolev_inner(x2p, st.Q[i], st.params, mom);
    conn.b[i] = num / kh[i];
    conn.sigma[i] = *conn.b[i] * kh[i] / k[i];
    if (n >= 2) {
      conn.alpha[i] = k[i] / kh[i - 2];
      conn.delta[i] = kh[i] / k[i - 2];
    }
    // Odd-step a_n = k_{2n-1} / k̂_{2n-2}.
    if (n >= 1 && 2 * n - 2 <= N && 2 * n - 1 <= freud.n_max()) {
      conn.a[i] = k[static_cast<std::size_t>(2 * n - 1)] / kh[static_cast<std::size_t>(2 * n - 2)];
    }
  }
  return conn;
}

QEvaluator QEvaluator::freud_only(const FreudTable& freud) {
  QEvaluator e;
  e.kind_ = Kind::freud;
  e.freud_ = &freud;
  return e;
}

QEvaluator QEvaluator::fast(const FastConnection& fast, const FreudTable& freud) {
  QEvaluator e;
  e.kind_ = Kind::fast;
  e.fast_ = &fast;
  e.freud_ = &freud;
  return e;
}

QEvaluator QEvaluator::table(const SobolevTable& st) {
  QEvaluator e;
  e.kind_ = Kind::table;
  e.table_ = &st;
  return e;
}

Complex QEvaluator::operator()(int n, const Complex& x) const {
  switch (kind_) {
    case Kind::freud:
      return eval_P(*freud_, n, x);
    case Kind::fast:
      return q_eval_fast(n, x, fast_->conn, *freud_);
    case Kind::table: {
      if (n < 0 || n > table_->N()) throw RangeError("Q_" + std::to_string(n) + " beyond table");
      Complex xp(x.re.with_precision(table_->precision), x.im.with_precision(table_->precision));
      return poly_eval(table_->Q[static_cast<std::size_t>(n)], xp);
    }
  }
  return Complex();
}

int QEvaluator::max_n() const {
  switch (kind_) {
    case Kind::freud: return freud_->n_max();
    case Kind::fast: return std::min(fast_->conn.size(), freud_->n_max());
    case Kind::table: return table_->N();
  }
  return 0;
}

QFamily::QFamily(const SobolevParams& params, const FreudTable& freud, const std::vector<int>& ns,
                 const Real& tol, GramSchmidtOptions opts)
    : params_(params), freud_(&freud), n_max_(0) {
  int odd_max = -1;
  for (int n : ns) {
    if (n < 0) throw ParameterError("QFamily index must be nonnegative");
    n_max_ = std::max(n_max_, n);
    if (n % 2) odd_max = std::max(odd_max, n);
  }
  if (n_max_ > freud.n_max()) throw RangeError("Freud table shorter than requested Q family");
  if (params.all_zero()) return;
  const Precision p = freud.precision;
  if (params.r() <= 1) {
    if (n_max_ >= 1) fast_ = khat_recurrence_lambda2zero(n_max_, params.mass(0, p), freud);
    const Real lambda1 = params.mass(1, p);
    if (!lambda1.is_zero() && odd_max >= 1) {
      table_ = gram_schmidt_Q(odd_max, SobolevParams({Real(p), lambda1}), p, tol, opts);
    }
    return;
  }
  table_ = gram_schmidt_Q(n_max_, params, p, tol, opts);
}

std::string QFamily::route(int n) const {
  if (params_.all_zero()) return "freud";
  if (params_.r() <= 1) {
    if (n == 0) return "constant";
    if (n % 2 == 0) return "fast";
    return table_ ? "gram_schmidt" : "freud";
  }
  return "gram_schmidt";
}

namespace {

template <typename T>
T q_family_eval(int n, const T& x, const SobolevParams& params, const FreudTable& freud,
                const std::optional<FastConnection>& fast, const std::optional<SobolevTable>& table) {
  if (params.all_zero()) return eval_P(freud, n, x);
  if (params.r() <= 1) {
    if (n == 0) return eval_P(freud, 0, x);
    if (n % 2 == 0) return q_eval_fast(n, x, fast->conn, freud);
    if (!table) return eval_P(freud, n, x);
  }
  const Poly& q = table->Q[static_cast<std::size_t>(n)];
  if constexpr (std::is_same_v<T, Real>) {
    return poly_eval(q, x.with_precision(std::max(x.precision(), table->precision)));
  } else {
    const Precision p = std::max(x.precision(), table->precision);
    return poly_eval(q, Complex(x.re.with_precision(p), x.im.with_precision(p)));
  }
}

}  // namespace

std::vector<std::optional<Real>> odd_step_a_decoupled(int n_max, const Real& lambda0,
                                                      const FreudTable& freud) {
  if (n_max < 1) throw ParameterError("odd_step_a_decoupled needs n_max >= 1");
  const int top = std::max(1, 2 * n_max - 2);
  if (2 * n_max - 1 > freud.n_max()) throw RangeError("Freud table too short for odd-step a");
  const FastConnection fast = khat_recurrence_lambda2zero(top, lambda0, freud);
  std::vector<std::optional<Real>> a(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) {
    a[static_cast<std::size_t>(n)] =
        freud.k[static_cast<std::size_t>(2 * n - 1)] / fast.khat[static_cast<std::size_t>(2 * n - 2)];
  }
  return a;
}

void QFamily::check(int n) const {
  if (n < 0 || n > n_max_) throw RangeError("Q_" + std::to_string(n) + " beyond family");
  if (table_ && n > table_->N() && (params_.r() >= 2 || n % 2 == 1)) {
    throw RangeError("Q_" + std::to_string(n) + " was not requested when the family was built");
  }
}

Complex QFamily::operator()(int n, const Complex& x) const {
  check(n);
  return q_family_eval(n, x, params_, *freud_, fast_, table_);
}

Real QFamily::operator()(int n, const Real& x) const {
  check(n);
  return q_family_eval(n, x, params_, *freud_, fast_, table_);
}

}  // namespace freudlab
