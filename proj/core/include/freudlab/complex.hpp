#pragma once

#include <algorithm>

#include "freudlab/real.hpp"

namespace freudlab {

/// Complex number with arbitrary-precision parts. Both parts share a precision.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  explicit Complex(Precision p) : re(p), im(p) {}
  explicit Complex(Real real) : re(std::move(real)), im(re.precision()) {}
  Complex(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}

  Precision precision() const { return std::max(re.precision(), im.precision()); }
  bool is_real() const { return im.is_zero(); }

  Complex& operator+=(const Complex& z);
  Complex& operator-=(const Complex& z);
  Complex& operator*=(const Complex& z);
  Complex& operator/=(const Complex& z);

  Complex operator-() const { return Complex(-re, -im); }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

  friend Complex operator*(const Complex& a, const Real& s) { return Complex(a.re * s, a.im * s); }
  friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
  friend Complex operator/(const Complex& a, const Real& s) { return Complex(a.re / s, a.im / s); }
  friend Complex operator+(const Complex& a, const Real& s) { return Complex(a.re + s, a.im); }
  friend Complex operator-(const Complex& a, const Real& s) { return Complex(a.re - s, a.im); }
  friend Complex operator+(const Complex& a, long s) { return Complex(a.re + s, a.im); }
  friend Complex operator-(const Complex& a, long s) { return Complex(a.re - s, a.im); }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

Complex conj(const Complex& z);
/// Modulus |z|.
Real abs(const Complex& z);
/// Principal square root: branch cut on the negative real axis, Re(sqrt) >= 0.
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long e);

}  // namespace freudlab
