#include "freudlab/error.hpp"
#include "freudlab/freud.hpp"
#include "freudlab/gamma.hpp"
#include "support.hpp"

using namespace freudlab;
using namespace freudlab::test;

namespace {

// Trapezoid rule for x^m exp(-x^4) on [-7, 7]; spectrally accurate for this
// entire, rapidly decaying integrand.
Real trapezoid_moment(int m, Precision p) {
  const int per_unit = 64;
  const int half = 7 * per_unit;
  Real h(1, p);
  h /= per_unit;
  Real s(p);
  for (int i = -half; i <= half; ++i) {
    Real x = h * i;
    Real x2 = x * x;
    s += pow(x, m) * exp(-(x2 * x2));
  }
  return s * h;
}

}  // namespace

TEST(Moments, MatchQuadrature) {
  const Precision p{192};
  for (int m : {0, 2, 4, 6, 10}) {
    EXPECT_TRUE(relative_difference(moment(m, p), trapezoid_moment(m, p)) <= Real::from_string("1e-40", p)) << m;
  }
  EXPECT_REAL_NEAR(moment(0, P256), R("1.8128050"), R("1e-7"));
  EXPECT_REAL_NEAR(moment(2, P256), R("0.6127084"), R("1e-7"));
  EXPECT_REAL_NEAR(moment(4, P256), R("0.4532012"), R("1e-7"));
  EXPECT_EQ(moment(3, P256), 0L);
  EXPECT_EQ(moment(4, P256), gamma_quarter(1, P256) / 8);
}

TEST(Moments, TableAgreesWithClosedForm) {
  MomentTable t(40, P256);
  for (int m = 0; m <= 40; ++m) {
    EXPECT_TRUE(relative_difference(t(m), moment(m, P256)) <= Real::pow2(-245, P256)) << m;
  }
  EXPECT_THROW(t(41), RangeError);
}

TEST(Forward, SeedsAndFirstSteps) {
  FreudTable t = string_forward(3, Precision{128});
  const Precision p{128};
  Real c1 = mpfr_gamma_of(3, 4, p) / mpfr_gamma_of(1, 4, p);
  EXPECT_EQ(t.c[0], 0L);
  EXPECT_REAL_NEAR(t.c[1], c1, Real::from_string("1e-36", p));
  EXPECT_REAL_NEAR(t.c[1], R("0.3379891", p), Real::from_string("1e-7", p));
  // One exact step of the string equation.
  EXPECT_REAL_NEAR(t.c[2], 1L / (4 * c1) - c1, Real::from_string("1e-36", p));
  EXPECT_REAL_NEAR(t.c[2], R("0.4016796", p), Real::from_string("1e-7", p));
  EXPECT_REAL_NEAR(t.c[3], R("0.5051042323448222978184701659211832231444", p), Real::from_string("1e-36", p));
}

TEST(Forward, TrustedRangeIsHonest) {
  // At 64 bits the instability wins long before n = 200.
  try {
    FreudTable t = string_forward(200, Precision{64});
    EXPECT_LT(t.trusted, 200);
  } catch (const PrecisionError& e) {
    EXPECT_GT(e.index(), 2);
    EXPECT_LE(e.index(), 200);
  }
  FreudTable e = string_forward_escalating(200, Precision{64});
  EXPECT_EQ(e.trusted, 200);
  EXPECT_EQ(e.precision, Precision{64});
}

TEST(Forward, RejectsEmpty) { EXPECT_THROW(string_forward(0, P256), ParameterError); }

TEST(Newton, EmergentFirstCoefficient) {
  const FreudTable t = string_newton(50, P256, R("1e-40"));
  Real c1 = mpfr_gamma_of(3, 4, P256) / mpfr_gamma_of(1, 4, P256);
  EXPECT_REAL_NEAR(t.c[1], c1, R("1e-30"));
}

TEST(Newton, AgreesWithForwardOnTrustedRange) {
  const FreudTable n = freud(300);
  const FreudTable f = string_forward(100, P256);
  ASSERT_GT(f.trusted, 20);
  const Real agree = Real::pow2(-128, P256);
  for (int i = 1; i <= f.trusted; ++i) {
    EXPECT_TRUE(relative_difference(n.c[i], f.c[i]) <= agree) << i;
  }
  const FreudTable fe = string_forward_escalating(300, P256);
  for (int i = 1; i <= 300; ++i) EXPECT_TRUE(relative_difference(n.c[i], fe.c[i]) <= agree) << i;
}

TEST(Newton, RejectsTinyTable) { EXPECT_THROW(string_newton(1, P256, R("1e-40")), ParameterError); }

// Properties of the table: positivity, residual, norms, limit trend.
TEST(FreudProperty, TableInvariants) {
  const FreudTable& t = freud(1000);
  EXPECT_EQ(t.c[0], 0L);
  const Real bound = 10 * Real::pow2(-256, P256);
  const Real inv12 = 1L / sqrt(Real(12, P256));
  for (int n = 1; n <= 1000; ++n) {
    ASSERT_GT(t.c[n].sign(), 0) << n;
    if (n < 1000) EXPECT_TRUE(t.string_residual(n) <= bound * n) << n;
    EXPECT_EQ(t.k[n], t.c[n] * t.k[n - 1]);
    if (n >= 5) {
      Real r = t.c[n] / sqrt(Real(n, P256));
      EXPECT_TRUE(r >= R("0.2") && r <= R("0.45")) << n;
    }
  }
  auto dev = [&](int n) { return abs(t.c[n] / sqrt(Real(n, P256)) - inv12); };
  EXPECT_TRUE(dev(1000) < dev(100));
  EXPECT_TRUE(dev(1000) <= R("1e-2"));
  // Orthonormal coefficients sqrt(c_n) / n^(1/4) tend to 12^(-1/4).
  const Real target = 1L / root(Real(12, P256), 4);
  auto odev = [&](int n) { return abs(sqrt(t.c[n]) / root(Real(n, P256), 4) - target); };
  EXPECT_TRUE(odev(1000) < odev(100));
}

TEST(FreudProperty, NormsStartAtMoments) {
  const FreudTable& t = freud(300);
  EXPECT_REAL_NEAR(t.k[0], R("1.8128050"), R("1e-7"));
  EXPECT_REAL_NEAR(t.k[1], moment(2, P256), R("1e-70"));
  EXPECT_REAL_NEAR(t.k[2], R("0.2461125"), R("1e-7"));
}

TEST(EvalP, LowOrderClosedForms) {
  const FreudTable& t = freud(300);
  EXPECT_EQ(eval_P(t, 0, R("0.3")), 1L);
  EXPECT_EQ(eval_P(t, 3, Real(P256)), 0L);
  EXPECT_REAL_NEAR(eval_P(t, 4, Real(P256)), t.c[1] * t.c[3], R("1e-70"));
  EXPECT_REAL_NEAR(eval_P(t, 4, Real(P256)), R("0.1707197350154949256899301556870191203425"), R("1e-38"));
  EXPECT_THROW(eval_P(t, 301, R("1")), RangeError);
  EXPECT_THROW(eval_P(t, -1, R("1")), RangeError);
}

TEST(EvalP, CoefficientsMatchRecurrenceValues) {
  const FreudTable& t = freud(300);
  Poly p2 = p_coefficients(t, 2);
  EXPECT_EQ(p2.degree(), 2);
  EXPECT_REAL_NEAR(p2[0], R("-0.3379891"), R("1e-7"));
  Poly p3 = p_coefficients(t, 3);
  EXPECT_REAL_NEAR(p3[1], R("-0.7396687"), R("1e-7"));
  EXPECT_EQ(p3.parity, Parity::odd);
  Poly p0 = p_coefficients(t, 0);
  EXPECT_EQ(p0.degree(), 0);
  EXPECT_EQ(p0[0], 1L);
  auto all = p_coefficients_all(t, 20);
  const Real x = R("1.37");
  const Complex z(R("0.4"), R("-1.1"));
  for (int n = 0; n <= 20; ++n) {
    EXPECT_TRUE(all[n].is_monic());
    EXPECT_TRUE(relative_difference(poly_eval(all[n], x), eval_P(t, n, x)) <= R("1e-60")) << n;
    Complex a = poly_eval(all[n], z);
    Complex b = eval_P(t, n, z);
    EXPECT_TRUE(abs(a - b) <= R("1e-60") * (1L + abs(b))) << n;
  }
}

TEST(DCoeff, DerivativeIdentityAtCoefficientLevel) {
  const FreudTable& t = freud(300);
  EXPECT_REAL_NEAR(d_coeff(t, 3), 4 * t.c[3] * t.c[2] * t.c[1], R("1e-70"));
  EXPECT_REAL_NEAR(d_coeff(t, 3), R("0.2742985803037673704154661875742787308122"), R("1e-38"));
  EXPECT_THROW(d_coeff(t, 2), RangeError);
  auto P = p_coefficients_all(t, 25);
  for (int n = 3; n <= 25; ++n) {
    Poly rhs = P[n - 1].scaled(Real(n, P256)) + P[n - 3].scaled(d_coeff(t, n));
    EXPECT_TRUE(relative_poly_residual(P[n].derivative(), rhs) <= R("1e-30")) << n;
  }
}

TEST(Gauss, TrivialAndExactness) {
  const FreudTable& t = freud(300);
  GaussRule g1 = gauss_freud(t, 1, R("1e-60"));
  ASSERT_EQ(g1.nodes.size(), 1u);
  EXPECT_EQ(g1.nodes[0], 0L);
  EXPECT_REAL_NEAR(g1.weights[0], moment(0, P256), R("1e-70"));

  GaussRule g3 = gauss_freud(t, 3, R("1e-60"));
  Real s0(P256), s2(P256), s4(P256);
  for (std::size_t i = 0; i < 3; ++i) {
    const Real& x = g3.nodes[i];
    EXPECT_GT(g3.weights[i].sign(), 0);
    s0 += g3.weights[i];
    s2 += g3.weights[i] * x * x;
    s4 += g3.weights[i] * pow(x, 4);
  }
  EXPECT_REAL_NEAR(s0, moment(0, P256), R("1e-25"));
  EXPECT_REAL_NEAR(s2, moment(2, P256), R("1e-25"));
  EXPECT_REAL_NEAR(s4, moment(4, P256), R("1e-25"));
}

// Orthogonality and norms of P_n checked through an independent quadrature.
TEST(GaussProperty, OrthogonalityAndNorms) {
  const FreudTable& t = freud(300);
  for (int n = 1; n <= 8; ++n) {
    GaussRule g = gauss_freud(t, n + 1, R("1e-60"));
    for (int m = 0; m <= n; ++m) {
      Real s(P256);
      for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        s += g.weights[i] * eval_P(t, m, g.nodes[i]) * eval_P(t, n, g.nodes[i]);
      }
      if (m < n) {
        EXPECT_TRUE(abs(s) <= R("1e-25") * sqrt(t.k[m] * t.k[n])) << m << "," << n;
      } else {
        EXPECT_TRUE(abs(s - t.k[n]) <= R("1e-25") * t.k[n]) << n;
      }
    }
  }
}
