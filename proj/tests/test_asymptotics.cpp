#include <random>

#include "freudlab/asymptotics.hpp"
#include "freudlab/error.hpp"
#include "support.hpp"

using namespace freudlab;
using namespace freudlab::test;

namespace {

Complex C(const char* re, const char* im = "0") { return Complex(R(re), R(im)); }

SobolevParams L(std::initializer_list<const char*> ls) {
  std::vector<Real> v;
  for (const char* s : ls) v.push_back(R(s));
  return SobolevParams(std::move(v));
}

const Real kGsTol = Real::pow2(-128, P256);

}  // namespace

TEST(Phi, Examples) {
  Complex a = phi(C("1.25"));
  EXPECT_REAL_NEAR(a.re, R("2"), R("1e-70"));
  EXPECT_TRUE(abs(a.im) <= R("1e-70"));
  Complex b = phi(C("-1.25"));
  EXPECT_REAL_NEAR(b.re, R("-2"), R("1e-70"));
  Complex c = phi(C("1.000000000000000000000000000001"));
  EXPECT_REAL_NEAR(c.re, R("1"), R("1e-14"));
  EXPECT_THROW(phi(C("0.5")), DomainError);
  EXPECT_THROW(phi(C("-1")), DomainError);
}

// Branch and conformal identities on random points off the cut.
TEST(PhiProperty, BranchAndIdentity) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  const Real ulps = 4 * Real::epsilon(P256);
  for (int i = 0; i < 200; ++i) {
    Complex z(Real::from_double(u(rng), P256), Real::from_double(u(rng), P256));
    if (z.im.is_zero() && abs(z.re) <= 1L) continue;
    Complex f = phi(z);
    EXPECT_TRUE(abs(f) > 1L);
    Complex s = f + Complex(Real(1, P256)) / f;
    Complex twoz = z * Real(2, P256);
    EXPECT_TRUE(abs(s - twoz) <= ulps * abs(twoz) * 4) << i;
    Complex fc = phi(conj(z));
    EXPECT_TRUE(abs(fc - conj(f)) <= ulps * abs(f));
    Complex fn = phi(-z);
    EXPECT_TRUE(abs(fn + f) <= ulps * abs(f));
  }
}

TEST(Targets, RatioTargetIsOne) {
  for (int r : {0, 1, 2, 3}) {
    for (const char* x : {"1.5", "2", "10"}) {
      Complex t = ratio_target(C(x), r);
      EXPECT_TRUE(abs(t - Real(1, P256)) <= R("1e-30")) << r << " " << x;
    }
  }
  EXPECT_TRUE(abs(ratio_target(C("2", "1"), 1) - Real(1, P256)) <= R("1e-30"));
  EXPECT_REAL_NEAR(scaled_cut_endpoint(P256), root(R("4") / 3, 4), R("1e-70"));
}

TEST(Targets, PRatioLimit) {
  Complex t = p_ratio_limit_target(C("1.5"));
  EXPECT_REAL_NEAR(t.re, R("0.785372"), R("2e-6"));
  // Independent: u = (3/4)^(1/4) x, phi(u) = u + sqrt(u^2 - 1).
  Real u = root(R("0.75"), 4) * R("1.5");
  Real ph = u + sqrt(u * u - 1L);
  EXPECT_REAL_NEAR(t.re, root(R("12"), 4) / ph, R("1e-70"));
  // Decay law 12^(1/4) / (2u) for large x.
  Real u100 = root(R("0.75"), 4) * 100;
  EXPECT_TRUE(relative_difference(p_ratio_limit_target(C("100")).re, root(R("12"), 4) / (2 * u100)) <= R("1e-4"));
  EXPECT_TRUE(abs(p_ratio_limit_target(C("200"))) < R("0.01"));
  Complex edge = p_ratio_limit_target(Complex(scaled_cut_endpoint(P256) + R("1e-6"), Real(P256)));
  EXPECT_REAL_NEAR(edge.re, root(R("12"), 4), R("1e-2"));
}

TEST(Empirical, TrivialCases) {
  const FreudTable& t = freud(300);
  QFamily zero(L({"0"}), t, {16}, kGsTol);
  RatioSample s = empirical_ratio(16, C("1.5"), zero, t);
  EXPECT_EQ(s.empirical.re, 1L);
  EXPECT_TRUE(s.empirical.im.is_zero());
  QFamily odd(L({"1"}), t, {17}, kGsTol);
  RatioSample o = empirical_ratio(17, C("1.5"), odd, t);
  EXPECT_TRUE(abs(o.empirical - Real(1, P256)) <= R("1e-25"));
}

TEST(Empirical, ConvergesForBothMassCases) {
  const FreudTable& t = freud(300);
  for (auto sp : {L({"1"}), L({"1", "1"})}) {
    QFamily q(sp, t, {16, 200, 256}, kGsTol);
    Real e16 = empirical_ratio(16, C("1.5"), q, t).abs_error;
    Real e200 = empirical_ratio(200, C("1.5"), q, t).abs_error;
    Real e256 = empirical_ratio(256, C("1.5"), q, t).abs_error;
    EXPECT_TRUE(e200 < R("0.05"));
    EXPECT_TRUE(e200 < e16);
    EXPECT_TRUE(e256 < e200);
  }
}

TEST(Empirical, ReciprocalCoherence) {
  const FreudTable& t = freud(300);
  QFamily q(L({"1"}), t, {64}, kGsTol);
  const Complex x = C("2", "0.5");
  RatioSample s = empirical_ratio(64, x, q, t);
  Real n4 = root(Real(64, P256), 4);
  Complex y = x * n4;
  Complex qp = q(64, y) / eval_P(t, 64, y);
  EXPECT_TRUE(abs(qp * s.empirical - Real(1, P256)) <= R("1e-60"));
}

TEST(Empirical, PRatioTrend) {
  const FreudTable& t = freud(600);
  std::vector<Real> errs;
  for (int n : {32, 64, 128, 256, 512}) errs.push_back(p_ratio_sample(n, C("1.5"), t).abs_error);
  for (std::size_t i = 1; i < errs.size(); ++i) EXPECT_TRUE(errs[i] < errs[i - 1]);
  EXPECT_TRUE(errs.back() < R("0.02"));
}

TEST(Limits, CAndFastPathTrends) {
  const FreudTable& t = freud(2002);
  FastConnection f = khat_recurrence_lambda2zero(1000, R("1"), t);
  auto diags = limit_diagnostics(f.conn, t, {100, 1000});
  ASSERT_FALSE(diags.empty());
  for (const auto& d : diags) {
    auto lo = d.deviation_at(100);
    auto hi = d.deviation_at(1000);
    ASSERT_TRUE(lo && hi) << d.name;
    EXPECT_TRUE(*hi < *lo) << d.name;
  }
  LimitDiagnostics c = c_limit_diagnostics(t, {1000});
  EXPECT_REAL_NEAR(c.limit, 1L / (2 * sqrt(R("3"))), R("1e-70"));
  EXPECT_TRUE(*c.deviation_at(1000) <= R("1e-2"));
}

TEST(Limits, DerivativeMassCaseKhatRatio) {
  const FreudTable& t = freud(1100);
  SobolevTable st = gram_schmidt_Q(60, L({"0", "1"}), P256, kGsTol);
  ConnectionTable conn = connection_pos(st, t);
  conn.a = odd_step_a_decoupled(500, Real(P256), t);
  auto diags = limit_diagnostics(conn, t, {6, 60, 50, 500});
  for (const auto& d : diags) {
    if (d.name == "a_n/sqrt(2n)") {
      EXPECT_TRUE(*d.deviation_at(500) < *d.deviation_at(50));
    } else if (d.name == "khat_n/k_n") {
      EXPECT_TRUE(*d.deviation_at(60) < *d.deviation_at(6));
      EXPECT_TRUE(*d.deviation_at(60) < R("5e-2"));
    }
  }
}

TEST(EqS, ExactChecks) {
  VerifyReport rep = limit_polynomial_checks();
  for (const auto& c : rep.checks) {
    if (c.gating) EXPECT_TRUE(c.passed(R("1e-30"))) << c.name;
  }
  auto wrong = rep.named("limit_poly.quartic_factor_1_9");
  ASSERT_EQ(wrong.size(), 1u);
  EXPECT_FALSE(wrong.front()->passed(R("1e-30")));
}

TEST(Prediction, DegenerateAndTrend) {
  const FreudTable& t = freud(300);
  PredictionResult z = prediction_experiment(2, L({"0", "0", "0"}), {16, 32}, {C("1.5")}, t, kGsTol);
  for (const auto& s : z.samples) EXPECT_TRUE(s.abs_error <= R("1e-60"));

  PredictionResult p = prediction_experiment(2, L({"1", "1", "1"}), {20, 60}, {C("1.2"), C("1.5"), C("3")}, t,
                                             kGsTol);
  auto dev = [&](const char* x, int n) {
    for (const auto& s : p.samples)
      if (s.n == n && s.x.re == R(x)) return s.abs_error;
    return Real(-1, P256);
  };
  EXPECT_TRUE(dev("1.5", 60) < dev("1.5", 20));
  EXPECT_TRUE(dev("3", 60) < dev("1.2", 60));
  for (const auto& c : p.trends.checks) EXPECT_NE(c.note.find("conjecture"), std::string::npos);
  EXPECT_THROW(prediction_experiment(1, L({"1", "1"}), {8}, {C("1.5")}, t, kGsTol), ParameterError);
}
