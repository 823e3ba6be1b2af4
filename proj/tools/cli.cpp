#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "freudlab/asymptotics.hpp"
#include "freudlab/error.hpp"
#include "freudlab/freud.hpp"
#include "freudlab/gamma.hpp"
#include "freudlab/identities.hpp"
#include "freudlab/sobolev.hpp"
#include "freudlab/zeros.hpp"
#include "output.hpp"

namespace freudlab::cli {

namespace {

const char* const kVersion = "0.1.0";

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--n-max", c.n_max, "largest index")->capture_default_str();
  sub->add_option("--lambdas", c.lambdas, "point masses lambda0,lambda1,... on f(0)g(0), f'(0)g'(0), ...")
      ->delimiter(',');
  sub->add_option("--prec-bits", c.prec_bits, "working precision in bits")->capture_default_str();
  sub->add_option("--method", c.method, "forward | newton | both")->capture_default_str();
  sub->add_option("--format", c.format, "csv | json")->capture_default_str();
  sub->add_option("--out", c.out_path, "output file (default stdout)");
  sub->add_option("--tol", c.tol, "tolerance")->capture_default_str();
  sub->add_option("--x", c.xs, "sample points, e.g. 1.5,2+0.5i")->delimiter(',');
  sub->add_option("--n", c.ns, "indices, comma separated")->delimiter(',');
  sub->add_option("--r", c.r, "number of derivative masses for predict")->capture_default_str();
  sub->add_option("--gs-n-max", c.gs_n_max, "Gram-Schmidt size for limits with derivative masses")
      ->capture_default_str();
  sub->add_flag("--p-ratio", c.p_ratio, "ratio: n^(1/4) P_{n-1}/P_n instead of P_n/Q_n");
}

// ---------------------------------------------------------------------------

struct Context {
  const RunConfig& cfg;
  Precision prec;
  Real tol;

  std::string fmt(const Real& x) const { return x.with_precision(prec).to_string(prec.decimal_digits()); }
  std::optional<std::string> fmt(const std::optional<Real>& x) const {
    if (!x) return std::nullopt;
    return fmt(*x);
  }
  /// Agreement target for self-checks inside one precision.
  Real half_precision() const { return Real::pow2(-prec.bits / 2, prec); }
  Real gs_tol() const { return min(tol, half_precision()); }
};

std::string bool_str(bool b) { return b ? "true" : "false"; }

template <typename T>
std::string join(const std::vector<T>& v, const std::function<std::string(const T&)>& f) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += f(v[i]);
  }
  return s;
}

Complex parse_complex(std::string s, Precision p) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (s.empty()) throw ParameterError("empty sample point");
  if (s.back() != 'i') return Complex(Real::from_string(s, p));
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return Complex(re.empty() ? Real(p) : Real::from_string(re, p), Real::from_string(im, p));
}

SobolevParams params_of(const Context& ctx, const std::vector<std::string>& lambdas) {
  std::vector<Real> l;
  for (const auto& s : lambdas) l.push_back(Real::from_string(s, ctx.prec));
  return SobolevParams(std::move(l));
}

SobolevParams default_params(const Context& ctx) {
  return params_of(ctx, ctx.cfg.lambdas.empty() ? std::vector<std::string>{"0"} : ctx.cfg.lambdas);
}

Real newton_tol(Precision p, int n) { return Real::pow2(-(p.bits * 7) / 8, p) * std::max(1, n); }

// Freud table for commands that consume c_n; forward and both escalate the
// forward recurrence until the whole range is trusted.
FreudTable freud_table(const Context& ctx, int n) {
  n = std::max(n, 2);
  if (ctx.cfg.method == "forward") return string_forward_escalating(n, ctx.prec);
  return string_newton(n, ctx.prec, newton_tol(ctx.prec, n));
}

std::vector<std::pair<std::string, std::optional<std::string>>> base_meta(const Context& ctx,
                                                                           const SobolevParams* params) {
  const RunConfig& c = ctx.cfg;
  std::vector<std::pair<std::string, std::optional<std::string>>> m;
  m.emplace_back("tool", std::string("freudlab ") + kVersion);
  m.emplace_back("command", c.command);
  m.emplace_back("n_max", std::to_string(c.n_max));
  if (params) m.emplace_back("lambdas", params->to_string());
  m.emplace_back("prec_bits", std::to_string(c.prec_bits));
  m.emplace_back("method", c.method);
  m.emplace_back("tol", c.tol);
  if (!c.ns.empty()) m.emplace_back("n", join<int>(c.ns, [](const int& v) { return std::to_string(v); }));
  if (!c.xs.empty()) m.emplace_back("x", join<std::string>(c.xs, [](const std::string& v) { return v; }));
  // No wall clock: output must be reproducible. SOURCE_DATE_EPOCH is echoed when set.
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  if (epoch) {
    m.emplace_back("timestamp", std::string(epoch));
  } else {
    m.emplace_back("timestamp", std::nullopt);
  }
  return m;
}

// ---------------------------------------------------------------------------

Table cmd_coeffs(const Context& ctx) {
  const int N = ctx.cfg.n_max;
  const std::string& method = ctx.cfg.method;
  Table t;
  t.meta = base_meta(ctx, nullptr);
  t.header = {"n", "c_n", "k_n", "residual", "trusted"};

  // Trusted prefix of the plain forward run at the requested precision.
  int plain_trusted = 0;
  try {
    plain_trusted = string_forward(N, ctx.prec).trusted;
  } catch (const PrecisionError& e) {
    plain_trusted = std::max(0, e.index() - 1);
  }
  t.meta.emplace_back("forward_trusted_at_prec", std::to_string(plain_trusted));

  FreudTable table;
  std::vector<bool> trusted(static_cast<std::size_t>(N) + 1, true);
  if (method == "forward") {
    table = string_forward_escalating(N, ctx.prec);
  } else {
    if (N < 2) throw ParameterError("newton needs --n-max >= 2");
    table = string_newton(N, ctx.prec, newton_tol(ctx.prec, N));
    if (method == "both") {
      const FreudTable fwd = string_forward_escalating(N, ctx.prec);
      const Real agree = ctx.half_precision();
      Real worst(ctx.prec);
      for (int n = 1; n <= N; ++n) {
        const auto i = static_cast<std::size_t>(n);
        Real gap = relative_difference(table.c[i], fwd.c[i]);
        trusted[i] = gap <= agree;
        worst = max(worst, gap);
      }
      t.meta.emplace_back("max_method_gap", ctx.fmt(worst));
    }
    const Real gamma_c1 = gamma_quarter(3, ctx.prec) / gamma_quarter(1, ctx.prec);
    t.meta.emplace_back("c1_gamma_gap", ctx.fmt(abs(table.c[1] - gamma_c1)));
  }

  Real worst_res(ctx.prec);
  for (int n = 0; n <= N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    std::optional<std::string> res;
    if (n >= 1 && n + 1 <= table.n_max()) {
      Real r = table.string_residual(n);
      if (trusted[i] && trusted[i + 1]) worst_res = max(worst_res, r / Real(n, ctx.prec));
      res = ctx.fmt(r);
    }
    t.add_row({std::to_string(n), ctx.fmt(table.c[i]), ctx.fmt(table.k[i]), res, bool_str(trusted[i])});
  }
  t.meta.emplace_back("max_scaled_residual", ctx.fmt(worst_res));
  return t;
}

std::optional<ConnectionTable> connection_for(const SobolevTable& st, const FreudTable& freud) {
  if (st.params.derivative_masses_zero()) return connection_zero(st, freud);
  if (st.params.x2_self_adjoint()) return connection_pos(st, freud);
  return std::nullopt;
}

Table cmd_sobolev(const Context& ctx) {
  const SobolevParams params = default_params(ctx);
  const int N = ctx.cfg.n_max;
  const FreudTable freud = freud_table(ctx, N + 2);
  const SobolevTable st = gram_schmidt_Q(N, params, ctx.prec, ctx.gs_tol());
  const std::optional<ConnectionTable> conn = connection_for(st, freud);

  Table t;
  t.meta = base_meta(ctx, &params);
  t.meta.emplace_back("case", conn ? std::optional<std::string>(to_string(conn->kind)) : std::nullopt);
  t.meta.emplace_back("gram_schmidt_bits", std::to_string(st.precision.bits));
  t.header = {"n", "khat_n", "a_n", "b_n", "alpha_n", "sigma_n", "delta_n", "q_coeffs"};
  for (int n = 0; n <= N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    auto cell = [&](const std::vector<std::optional<Real>>& seq) -> std::optional<std::string> {
      if (!conn) return std::nullopt;
      return ctx.fmt(ConnectionTable::at(seq, n));
    };
    std::optional<std::string> a, b, al, sg, de;
    if (conn) {
      a = cell(conn->a);
      b = cell(conn->b);
      al = cell(conn->alpha);
      sg = cell(conn->sigma);
      de = cell(conn->delta);
    }
    t.add_row({std::to_string(n), ctx.fmt(st.khat[i]), a, b, al, sg, de,
               join<Real>(st.Q[i].coeffs, [&](const Real& v) { return ctx.fmt(v); })});
  }
  return t;
}

std::vector<int> indices_or_range(const Context& ctx, int from) {
  if (!ctx.cfg.ns.empty()) return ctx.cfg.ns;
  std::vector<int> ns;
  for (int n = from; n <= ctx.cfg.n_max; ++n) ns.push_back(n);
  return ns;
}

Table cmd_zeros(const Context& ctx) {
  const SobolevParams params = default_params(ctx);
  const std::vector<int> ns = indices_or_range(ctx, 1);
  const int top = *std::max_element(ns.begin(), ns.end());
  const FreudTable freud = freud_table(ctx, top + 2);
  const SobolevTable st = gram_schmidt_Q(top, params, ctx.prec, ctx.gs_tol());

  Table t;
  t.meta = base_meta(ctx, &params);
  t.header = {"n",     "polynomial", "all_real",  "found",      "zeros",
              "radii", "interlace",  "strict",    "degenerate", "outer_q_beyond_p"};
  auto list = [&](const std::vector<Real>& v) { return join<Real>(v, [&](const Real& x) { return ctx.fmt(x); }); };
  for (int n : ns) {
    if (n < 1) throw ParameterError("zeros needs indices >= 1");
    const ZeroReport zp = zeros_P(freud, n, ctx.tol);
    t.add_row({std::to_string(n), "P", bool_str(zp.all_real), std::to_string(zp.found), list(zp.zeros),
               list(zp.radii), std::nullopt, std::nullopt, std::nullopt, std::nullopt});
    const ZeroReport zq = interlacing_report(st, freud, n, ctx.tol);
    std::optional<std::string> outer;
    if (zq.outer_beyond_reference) outer = bool_str(*zq.outer_beyond_reference);
    t.add_row({std::to_string(n), "Q", bool_str(zq.all_real), std::to_string(zq.found), list(zq.zeros),
               list(zq.radii),
               join<Interlace>(zq.interlace, [](const Interlace& v) { return std::string(to_string(v)); }),
               bool_str(zq.strictly_interlaces()), bool_str(zq.degenerate()), outer});
  }
  return t;
}

Table cmd_limits(const Context& ctx) {
  const SobolevParams params = default_params(ctx);
  std::vector<int> ns = ctx.cfg.ns;
  if (ns.empty()) {
    for (int n : {10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000}) {
      if (n <= ctx.cfg.n_max) ns.push_back(n);
    }
    if (std::find(ns.begin(), ns.end(), ctx.cfg.n_max) == ns.end()) ns.push_back(ctx.cfg.n_max);
  }
  const int top = *std::max_element(ns.begin(), ns.end());
  const FreudTable freud = freud_table(ctx, 2 * top + 2);

  Table t;
  t.meta = base_meta(ctx, &params);
  std::vector<LimitDiagnostics> diags;
  const Real lambda0 = params.mass(0, ctx.prec);
  if (params.derivative_masses_zero()) {
    const FastConnection fast = khat_recurrence_lambda2zero(top, lambda0, freud);
    diags = limit_diagnostics(fast.conn, freud, ns);
    t.meta.emplace_back("case", "lambda2_zero");
    t.meta.emplace_back("source", "fast recurrence");
  } else if (params.x2_self_adjoint()) {
    const int gs_n = std::min(ctx.cfg.gs_n_max, top);
    const SobolevTable st = gram_schmidt_Q(gs_n, params, ctx.prec, ctx.gs_tol());
    ConnectionTable conn = connection_pos(st, freud);
    conn.a = odd_step_a_decoupled(top, lambda0, freud);
    diags = limit_diagnostics(conn, freud, ns);
    t.meta.emplace_back("case", "lambda2_pos");
    t.meta.emplace_back("source", "a_n from the fast recurrence for lambdas={lambda0}; others from Gram-Schmidt up to n=" +
                                      std::to_string(gs_n));
  } else {
    diags.push_back(c_limit_diagnostics(freud, ns));
    t.meta.emplace_back("case", std::nullopt);
    t.meta.emplace_back("source", "Freud coefficients only");
  }
  t.header = {"sequence", "n", "value", "limit", "deviation"};
  for (const auto& d : diags) {
    for (std::size_t i = 0; i < d.samples.size(); ++i) {
      t.add_row({d.name, std::to_string(d.samples[i].first), ctx.fmt(d.samples[i].second), ctx.fmt(d.limit),
                 ctx.fmt(d.deviations[i])});
    }
  }
  return t;
}

std::vector<Complex> points_or(const Context& ctx, std::vector<std::string> fallback) {
  const auto& src = ctx.cfg.xs.empty() ? fallback : ctx.cfg.xs;
  std::vector<Complex> xs;
  for (const auto& s : src) xs.push_back(parse_complex(s, ctx.prec));
  return xs;
}

void ratio_row(Table& t, const Context& ctx, const RatioSample& s, std::optional<std::string> note = {}) {
  t.add_row({ctx.fmt(s.x.re), ctx.fmt(s.x.im), std::to_string(s.n), s.params, ctx.fmt(s.empirical.re),
             ctx.fmt(s.empirical.im), ctx.fmt(s.target.re), ctx.fmt(s.target.im), ctx.fmt(s.abs_error),
             std::move(note)});
}

Table cmd_ratio(const Context& ctx) {
  const SobolevParams params = default_params(ctx);
  const std::vector<Complex> xs = points_or(ctx, {"1.2", "1.5", "2", "3", "1+i", "2+0.5i", "0.5+2i"});
  std::vector<int> ns = ctx.cfg.ns.empty() ? std::vector<int>{16, 32, 64, 128, 256} : ctx.cfg.ns;
  const int top = *std::max_element(ns.begin(), ns.end());
  const FreudTable freud = freud_table(ctx, top + 1);

  Table t;
  t.meta = base_meta(ctx, &params);
  t.header = {"x_re", "x_im", "n", "params", "empirical_re", "empirical_im", "target_re", "target_im",
              "abs_error", "note"};
  if (ctx.cfg.p_ratio) {
    t.meta.emplace_back("quantity", "n^(1/4) P_{n-1}(n^(1/4) x) / P_n(n^(1/4) x)");
    for (const auto& x : xs)
      for (int n : ns) ratio_row(t, ctx, p_ratio_sample(n, x, freud));
    return t;
  }
  t.meta.emplace_back("quantity", "P_n(n^(1/4) x) / Q_n(n^(1/4) x)");
  t.meta.emplace_back("target_note",
                      "the target (12^(1/4) x phi(u) / (1 + phi(u)^2))^(r+1) equals 1 identically since "
                      "phi(u) + 1/phi(u) = 2u; Q/P is its reciprocal");
  const QFamily q(params, freud, ns, ctx.gs_tol());
  for (const auto& x : xs) {
    for (int n : ns) {
      try {
        ratio_row(t, ctx, empirical_ratio(n, x, q, freud), q.route(n));
      } catch (const PoleError& e) {
        t.add_row({ctx.fmt(x.re), ctx.fmt(x.im), std::to_string(n), params.to_string(), std::nullopt,
                   std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::string(e.what())});
      }
    }
  }
  return t;
}

Table cmd_verify(const Context& ctx, bool& all_pass) {
  const SobolevParams params = default_params(ctx);
  const int N = ctx.cfg.n_max;
  const FreudTable freud = freud_table(ctx, N + 8);
  const SobolevTable st = gram_schmidt_Q(N, params, ctx.prec, ctx.gs_tol());
  VerifyReport rep = identity_suite(st, freud, N);
  if (params.r() == 1 && params.lambdas[1].sign() > 0) {
    rep.append(normalized_x2_recurrence_check(st, freud, N, ctx.gs_tol()));
  }
  rep.append(limit_polynomial_checks());
  all_pass = rep.all_pass(ctx.tol);

  Table t;
  t.meta = base_meta(ctx, &params);
  t.meta.emplace_back("gram_schmidt_bits", std::to_string(st.precision.bits));
  t.meta.emplace_back("checks", std::to_string(rep.checks.size()));
  t.meta.emplace_back("max_gating_residual", ctx.fmt(rep.max_residual(ctx.prec)));
  t.meta.emplace_back("all_pass", bool_str(all_pass));
  t.header = {"name", "params", "n", "residual", "passed", "gating", "note"};
  for (const auto& c : rep.checks) {
    std::optional<std::string> res;
    if (!c.verdict) res = ctx.fmt(c.residual);
    t.add_row({c.name, c.params, std::to_string(c.n), res, bool_str(c.passed(ctx.tol)), bool_str(c.gating),
               c.note.empty() ? std::nullopt : std::optional<std::string>(c.note)});
  }
  return t;
}

Table cmd_predict(const Context& ctx) {
  const int r = ctx.cfg.r;
  if (r < 2) throw ParameterError("predict needs --r >= 2");
  std::vector<std::string> ls = ctx.cfg.lambdas;
  if (ls.empty()) ls = {"1"};
  if (ls.size() == 1) ls.assign(static_cast<std::size_t>(r) + 1, ls.front());
  if (static_cast<int>(ls.size()) != r + 1) throw ParameterError("predict needs r + 1 lambdas or a single value");
  const SobolevParams params = params_of(ctx, ls);
  const std::vector<Complex> xs = points_or(ctx, {"1.5", "3"});
  std::vector<int> ns = ctx.cfg.ns.empty() ? std::vector<int>{16, 20, 32, 50, 64, 100, 128, 200} : ctx.cfg.ns;
  const int top = *std::max_element(ns.begin(), ns.end());
  const FreudTable freud = freud_table(ctx, top + 1);
  const PredictionResult res = prediction_experiment(r, params, ns, xs, freud, ctx.gs_tol());

  Table t;
  t.meta = base_meta(ctx, &params);
  t.meta.emplace_back("label", "conjecture");
  t.meta.emplace_back("r", std::to_string(r));
  t.header = {"kind",      "x_re",     "x_im",    "n",       "empirical_re", "empirical_im",
              "target_re", "target_im", "abs_error", "verdict", "note"};
  for (const auto& s : res.samples) {
    t.add_row({"sample", ctx.fmt(s.x.re), ctx.fmt(s.x.im), std::to_string(s.n), ctx.fmt(s.empirical.re),
               ctx.fmt(s.empirical.im), ctx.fmt(s.target.re), ctx.fmt(s.target.im), ctx.fmt(s.abs_error),
               std::nullopt, std::nullopt});
  }
  for (std::size_t i = 0; i < res.trends.checks.size(); ++i) {
    const Check& c = res.trends.checks[i];
    t.add_row({"trend", ctx.fmt(xs[i].re), ctx.fmt(xs[i].im), std::to_string(c.n), std::nullopt, std::nullopt,
               std::nullopt, std::nullopt, ctx.fmt(c.residual), bool_str(c.passed(ctx.tol)), c.note});
  }
  return t;
}

void validate(const RunConfig& c) {
  static const std::vector<std::string> commands = {"coeffs", "sobolev", "zeros", "limits",
                                                    "ratio",  "verify",  "predict"};
  if (std::find(commands.begin(), commands.end(), c.command) == commands.end()) {
    throw ParameterError("unknown command '" + c.command + "'");
  }
  if (c.prec_bits < 64) throw ParameterError("--prec-bits must be >= 64");
  if (c.n_max < 1) throw ParameterError("--n-max must be >= 1");
  if (c.method != "forward" && c.method != "newton" && c.method != "both") {
    throw ParameterError("--method must be forward, newton or both");
  }
  if (c.format != "csv" && c.format != "json") throw ParameterError("--format must be csv or json");
  for (int n : c.ns) {
    if (n < 1) throw ParameterError("--n entries must be >= 1");
  }
}

}  // namespace

int parse_args(int argc, const char* const* argv, RunConfig& config, std::ostream& out, std::ostream& err) {
  CLI::App app{"Freud and Sobolev orthogonal polynomial laboratory", "freudlab"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"coeffs", "recurrence coefficients c_n and norms k_n"},
      {"sobolev", "Sobolev orthogonal polynomials and connection coefficients"},
      {"zeros", "zeros of P_n and Q_n with interlacing verdicts"},
      {"limits", "limit diagnostics of the coefficient sequences"},
      {"ratio", "scaled ratios P_n/Q_n against their limit"},
      {"verify", "identity suite; exit 4 if any gating residual exceeds --tol"},
      {"predict", "ratio diagnostics for r >= 2 derivative masses (conjecture)"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, config);
    sub->callback([&config, name = std::string(s.name)] { config.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    config.command.clear();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    config.command.clear();
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadConfig;
  }
  return kOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    Precision prec{config.prec_bits};
    const Real tol = Real::from_string(config.tol, prec);
    if (tol.sign() <= 0) throw ParameterError("--tol must be positive");
    const Context ctx{config, prec, tol};

    Table table;
    bool verified = true;
    const std::string& c = config.command;
    if (c == "coeffs") {
      table = cmd_coeffs(ctx);
    } else if (c == "sobolev") {
      table = cmd_sobolev(ctx);
    } else if (c == "zeros") {
      table = cmd_zeros(ctx);
    } else if (c == "limits") {
      table = cmd_limits(ctx);
    } else if (c == "ratio") {
      table = cmd_ratio(ctx);
    } else if (c == "verify") {
      table = cmd_verify(ctx, verified);
    } else {
      table = cmd_predict(ctx);
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.out_path.empty()) {
      file.open(config.out_path, std::ios::binary | std::ios::trunc);
      if (!file) {
        err << "freudlab: cannot write " << config.out_path << '\n';
        return kFailure;
      }
      sink = &file;
    }
    if (config.format == "csv") {
      write_csv(table, *sink);
    } else {
      write_json(table, *sink);
    }
    sink->flush();
    return verified ? kOk : kVerifyFailed;
  } catch (const ParameterError& e) {
    err << "freudlab: " << e.what() << '\n';
    return kBadConfig;
  } catch (const RangeError& e) {
    err << "freudlab: " << e.what() << '\n';
    return kBadConfig;
  } catch (const DomainError& e) {
    err << "freudlab: " << e.what() << '\n';
    return kBadConfig;
  } catch (const PrecisionError& e) {
    err << "freudlab: " << e.what() << '\n';
    return kPrecisionCap;
  } catch (const IterationError& e) {
    err << "freudlab: " << e.what() << '\n';
    return kPrecisionCap;
  } catch (const Error& e) {
    err << "freudlab: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace freudlab::cli
