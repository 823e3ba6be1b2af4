#pragma once

#include <vector>

#include "freudlab/complex.hpp"
#include "freudlab/real.hpp"

namespace freudlab {

enum class Parity { even, odd, none };

Parity parity_of_degree(int n);
const char* to_string(Parity p);

/// Dense polynomial in one variable. coeffs[i] multiplies x^i.
///
/// When parity is even (odd) every odd-index (even-index) coefficient is
/// exactly zero. Operations that preserve parity keep the tag.
struct Poly {
  std::vector<Real> coeffs;
  Parity parity = Parity::none;

  Poly() = default;
  Poly(std::vector<Real> c, Parity p) : coeffs(std::move(c)), parity(p) {}

  static Poly monomial(int n, Precision p);
  static Poly constant(Real value);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const Real& operator[](int i) const { return coeffs[static_cast<std::size_t>(i)]; }
  Real& operator[](int i) { return coeffs[static_cast<std::size_t>(i)]; }
  /// Coefficient of x^i, zero beyond the degree.
  Real coeff(int i) const;
  Precision precision() const;
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1L; }

  Real operator()(const Real& x) const;
  Complex operator()(const Complex& x) const;

  Poly times_x() const;
  Poly times_x2() const;
  Poly derivative() const;
  /// Drops the (zero) constant term of an odd polynomial: returns p(x)/x.
  Poly divided_by_x() const;
  Poly scaled(const Real& s) const;
  Real max_abs_coeff() const;

  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
};

/// Horner evaluation.
Complex poly_eval(const Poly& p, const Complex& x);
Real poly_eval(const Poly& p, const Real& x);

/// max_i |lhs_i - rhs_i| divided by the largest coefficient magnitude of either
/// side; the relative size of a polynomial identity's defect.
Real relative_poly_residual(const Poly& lhs, const Poly& rhs);

}  // namespace freudlab
