#include "freudlab/complex.hpp"

namespace freudlab {

Complex& Complex::operator+=(const Complex& z) {
  re += z.re;
  im += z.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& z) {
  re -= z.re;
  im -= z.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& z) {
  Real r = re * z.re - im * z.im;
  Real i = re * z.im + im * z.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

// Smith's algorithm.
Complex& Complex::operator/=(const Complex& z) {
  if (abs(z.re) >= abs(z.im)) {
    Real t = z.im / z.re;
    Real d = z.re + z.im * t;
    Real r = (re + im * t) / d;
    Real i = (im - re * t) / d;
    re = std::move(r);
    im = std::move(i);
  } else {
    Real t = z.re / z.im;
    Real d = z.re * t + z.im;
    Real r = (re * t + im) / d;
    Real i = (im * t - re) / d;
    re = std::move(r);
    im = std::move(i);
  }
  return *this;
}

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Complex sqrt(const Complex& z) {
  const Precision p = z.precision();
  if (z.re.is_zero() && z.im.is_zero()) return Complex(p);
  Real m = abs(z);
  Real a = sqrt((m + abs(z.re)) / 2);
  // a = sqrt((|z| + |re|)/2) avoids cancellation; the other part is im/(2a).
  Real b = z.im / (2 * a);
  if (z.re.sign() >= 0) return Complex(a, b);
  if (z.im.sign() >= 0) return Complex(abs(b), a);
  return Complex(abs(b), -a);
}

Complex pow(const Complex& z, long e) {
  Complex result(Real(1, z.precision()));
  Complex base = z;
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  while (k != 0) {
    if (k & 1UL) result *= base;
    base *= base;
    k >>= 1;
  }
  if (invert) return Complex(Real(1, z.precision())) / result;
  return result;
}

}  // namespace freudlab
