#include "freudlab/zeros.hpp"
#include "support.hpp"

using namespace freudlab;
using namespace freudlab::test;

namespace {

SobolevParams L(std::initializer_list<const char*> ls) {
  std::vector<Real> v;
  for (const char* s : ls) v.push_back(R(s));
  return SobolevParams(std::move(v));
}

const Real kGsTol = Real::pow2(-128, P256);
const Real kZeroTol = R("1e-40");

// Sign sweep plus bisection on eval_P, no eigenvalues involved.
std::vector<Real> brute_force_zeros(const FreudTable& t, int n) {
  std::vector<Real> out;
  const int cells = 4000;
  const Real lo = R("-4");
  const Real h = R("8") / cells;
  Real a = lo;
  Real fa = eval_P(t, n, a);
  for (int i = 1; i <= cells; ++i) {
    Real b = lo + h * i;
    Real fb = eval_P(t, n, b);
    if (fb.is_zero()) {
      out.push_back(b);
    } else if (fa.sign() * fb.sign() < 0) {
      Real x = a, y = b;
      int sx = fa.sign();
      for (int k = 0; k < 200; ++k) {
        Real m = (x + y) / 2;
        int sm = eval_P(t, n, m).sign();
        if (sm == 0) {
          x = y = m;
          break;
        }
        if (sm == sx) x = m; else y = m;
      }
      out.push_back((x + y) / 2);
    }
    a = b;
    fa = fb;
  }
  return out;
}

}  // namespace

TEST(ZerosP, ClosedForms) {
  const FreudTable& t = freud(300);
  ZeroReport z1 = zeros_P(t, 1, kZeroTol);
  ASSERT_EQ(z1.zeros.size(), 1u);
  EXPECT_EQ(z1.zeros[0], 0L);
  ZeroReport z2 = zeros_P(t, 2, kZeroTol);
  ASSERT_EQ(z2.zeros.size(), 2u);
  EXPECT_REAL_NEAR(z2.zeros[1], sqrt(t.c[1]), kZeroTol);
  EXPECT_REAL_NEAR(z2.zeros[1], R("0.5813683"), R("1e-7"));
  EXPECT_REAL_NEAR(z2.zeros[0], -sqrt(t.c[1]), kZeroTol);
  ZeroReport z3 = zeros_P(t, 3, kZeroTol);
  ASSERT_EQ(z3.zeros.size(), 3u);
  EXPECT_REAL_NEAR(z3.zeros[2], R("0.8600400"), R("1e-7"));
  EXPECT_EQ(z3.zeros[1], 0L);
}

TEST(ZerosP, MatchBruteForceIsolation) {
  const FreudTable& t = freud(300);
  for (int n = 1; n <= 20; ++n) {
    ZeroReport z = zeros_P(t, n, kZeroTol);
    std::vector<Real> b = brute_force_zeros(t, n);
    ASSERT_EQ(b.size(), static_cast<std::size_t>(n)) << n;
    ASSERT_EQ(z.zeros.size(), b.size());
    for (int i = 0; i < n; ++i) EXPECT_REAL_NEAR(z.zeros[i], b[i], R("1e-35"));
    EXPECT_TRUE(z.all_real);
    EXPECT_EQ(z.found, n);
  }
}

TEST(ZerosPProperty, ConsecutiveOrdersInterlace) {
  const FreudTable& t = freud(300);
  for (int n = 1; n <= 60; ++n) {
    ZeroReport a = zeros_P(t, n, kZeroTol);
    ZeroReport b = zeros_P(t, n + 1, kZeroTol);
    for (int i = 0; i < n; ++i) {
      EXPECT_TRUE(b.zeros[i] < a.zeros[i] && a.zeros[i] < b.zeros[i + 1]) << n << " " << i;
    }
    EXPECT_TRUE(a.separated());
    for (int i = 0; i < n; ++i) EXPECT_TRUE(abs(a.zeros[i] + a.zeros[n - 1 - i]) <= 2 * kZeroTol);
  }
}

TEST(ZerosQ, ClosedForms) {
  const FreudTable& t = freud(300);
  SobolevTable a = gram_schmidt_Q(4, L({"1"}), P256, kGsTol);
  ZeroReport q2 = zeros_Q(a, t, 2, kZeroTol);
  ASSERT_EQ(q2.zeros.size(), 2u);
  EXPECT_REAL_NEAR(q2.zeros[1], sqrt(moment(2, P256) / (moment(0, P256) + 1L)), R("1e-38"));
  EXPECT_REAL_NEAR(q2.zeros[1], R("0.4667207"), R("1e-7"));

  SobolevTable b = gram_schmidt_Q(4, L({"1", "0"}), P256, kGsTol);
  ZeroReport q3 = zeros_Q(b, t, 3, kZeroTol);
  ZeroReport p3 = zeros_P(t, 3, kZeroTol);
  for (int i = 0; i < 3; ++i) EXPECT_REAL_NEAR(q3.zeros[i], p3.zeros[i], R("1e-38"));

  SobolevTable c = gram_schmidt_Q(4, L({"0", "1"}), P256, kGsTol);
  ZeroReport r3 = zeros_Q(c, t, 3, kZeroTol);
  EXPECT_REAL_NEAR(r3.zeros[2], R("0.5301120"), R("1e-7"));
  EXPECT_EQ(r3.zeros[1], 0L);
}

TEST(ZerosQ, GenericParityPolynomial) {
  // (x^2 - 1)(x^2 - 4) = x^4 - 5 x^2 + 4.
  Poly p({Real(4, P256), Real(P256), Real(-5, P256), Real(P256), Real(1, P256)}, Parity::even);
  ZeroReport z = zeros_parity_poly(p, {}, kZeroTol);
  ASSERT_TRUE(z.all_real);
  ASSERT_EQ(z.zeros.size(), 4u);
  EXPECT_REAL_NEAR(z.zeros[0], Real(-2, P256), kZeroTol);
  EXPECT_REAL_NEAR(z.zeros[2], Real(1, P256), kZeroTol);
  // x^2 + 1 has no real zeros.
  Poly q({Real(1, P256), Real(P256), Real(1, P256)}, Parity::even);
  ZeroReport w = zeros_parity_poly(q, {}, kZeroTol);
  EXPECT_FALSE(w.all_real);
  EXPECT_EQ(w.found, 0);
}

TEST(Interlacing, Examples) {
  const FreudTable& t = freud(300);
  SobolevTable s1 = gram_schmidt_Q(6, L({"1"}), P256, kGsTol);
  EXPECT_TRUE(interlacing_report(s1, t, 4, kZeroTol).strictly_interlaces());
  EXPECT_TRUE(interlacing_report(s1, t, 5, kZeroTol).degenerate());
  SobolevTable s10 = gram_schmidt_Q(6, L({"10"}), P256, kGsTol);
  EXPECT_TRUE(interlacing_report(s10, t, 6, kZeroTol).strictly_interlaces());
}

TEST(Interlacing, VerdictRules) {
  auto v = [](std::initializer_list<const char*> xs) {
    std::vector<Real> out;
    for (const char* s : xs) out.push_back(R(s));
    return out;
  };
  auto a = interlace_verdicts(v({"1", "3"}), v({"2", "4"}), kZeroTol);
  EXPECT_EQ(a[0], Interlace::strict);
  EXPECT_EQ(a[1], Interlace::strict);
  auto b = interlace_verdicts(v({"1", "5"}), v({"2", "4"}), kZeroTol);
  EXPECT_EQ(b[1], Interlace::violated);
  auto c = interlace_verdicts(v({"1", "3"}), v({"1", "3"}), kZeroTol);
  EXPECT_EQ(c[0], Interlace::degenerate);
  auto d = interlace_verdicts(v({"1", "3", "5"}), v({"2", "4"}), kZeroTol);
  for (auto x : d) EXPECT_EQ(x, Interlace::strict);
  auto e = interlace_verdicts(v({"3", "5"}), v({"2"}), kZeroTol);
  EXPECT_EQ(e[0], Interlace::violated);
}

// Even n with a mass on f(0)g(0) only: n real simple zeros, strict
// interlacing, and every positive Q-zero lies below its P partner.
TEST(InterlacingProperty, EvenIndexNoDerivativeMass) {
  const FreudTable& t = freud(300);
  for (const char* l0 : {"0.5", "1", "10"}) {
    SobolevTable st = gram_schmidt_Q(60, L({l0}), P256, kGsTol);
    for (int n = 4; n <= 60; n += 2) {
      ZeroReport r = interlacing_report(st, t, n, kZeroTol);
      EXPECT_TRUE(r.all_real) << l0 << " " << n;
      EXPECT_EQ(r.found, n);
      EXPECT_TRUE(r.separated());
      EXPECT_TRUE(r.strictly_interlaces()) << l0 << " " << n;
      ASSERT_TRUE(r.outer_beyond_reference.has_value());
      EXPECT_FALSE(*r.outer_beyond_reference);
      // Certified: Q_n changes sign across each enclosure.
      for (std::size_t i = 0; i < r.zeros.size(); ++i) {
        if (r.radii[i].is_zero()) continue;
        int lo = poly_eval(st.Q[n], r.zeros[i] - r.radii[i]).sign();
        int hi = poly_eval(st.Q[n], r.zeros[i] + r.radii[i]).sign();
        EXPECT_NE(lo, hi);
      }
    }
  }
}

TEST(InterlacingProperty, EvenIndexWithDerivativeMass) {
  const FreudTable& t = freud(300);
  SobolevTable st = gram_schmidt_Q(40, L({"1", "1"}), P256, kGsTol);
  SobolevTable deg = gram_schmidt_Q(40, L({"0", "1"}), P256, kGsTol);
  for (int n = 2; n <= 40; n += 2) {
    EXPECT_TRUE(interlacing_report(st, t, n, kZeroTol).strictly_interlaces()) << n;
    // Without lambda0 the even Q coincide with P.
    EXPECT_TRUE(interlacing_report(deg, t, n, kZeroTol).degenerate()) << n;
  }
}

TEST(NormalizedX2, ResidualsAndInterlacing) {
  const FreudTable& t = freud(300);
  for (auto sp : {L({"0", "1"}), L({"1", "1"})}) {
    SobolevTable st = gram_schmidt_Q(22, sp, P256, kGsTol);
    VerifyReport rep = normalized_x2_recurrence_check(st, t, 20, kZeroTol);
    for (const Check* c : rep.named("x2rec.residual")) EXPECT_TRUE(c->residual <= R("1e-22")) << c->n;
    for (const Check* c : rep.named("x2rec.symmetry")) EXPECT_TRUE(c->residual <= R("1e-22")) << c->n;
    auto il = rep.named("x2rec.zero_interlacing");
    ASSERT_FALSE(il.empty());
    for (const Check* c : il) EXPECT_TRUE(c->passed(kZeroTol)) << c->n;
  }
}
