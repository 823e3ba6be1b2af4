#include "freudlab/poly.hpp"

#include <algorithm>

#include "freudlab/error.hpp"

namespace freudlab {

Parity parity_of_degree(int n) { return (n % 2 == 0) ? Parity::even : Parity::odd; }

const char* to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::none: return "none";
  }
  return "none";
}

namespace {

Parity flip(Parity p) {
  if (p == Parity::even) return Parity::odd;
  if (p == Parity::odd) return Parity::even;
  return Parity::none;
}

}  // namespace

Poly Poly::monomial(int n, Precision p) {
  if (n < 0) throw RangeError("negative monomial degree");
  std::vector<Real> c(static_cast<std::size_t>(n) + 1, Real(p));
  c.back() = Real(1, p);
  return Poly(std::move(c), parity_of_degree(n));
}

Poly Poly::constant(Real value) {
  std::vector<Real> c;
  c.push_back(std::move(value));
  return Poly(std::move(c), Parity::even);
}

Real Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Real(precision());
  return coeffs[static_cast<std::size_t>(i)];
}

Precision Poly::precision() const {
  Precision p{64};
  for (const auto& c : coeffs) p = std::max(p, c.precision());
  return p;
}

Real Poly::operator()(const Real& x) const { return poly_eval(*this, x); }
Complex Poly::operator()(const Complex& x) const { return poly_eval(*this, x); }

Poly Poly::times_x() const {
  std::vector<Real> c;
  c.reserve(coeffs.size() + 1);
  c.emplace_back(precision());
  c.insert(c.end(), coeffs.begin(), coeffs.end());
  return Poly(std::move(c), flip(parity));
}

Poly Poly::times_x2() const {
  std::vector<Real> c;
  c.reserve(coeffs.size() + 2);
  c.emplace_back(precision());
  c.emplace_back(precision());
  c.insert(c.end(), coeffs.begin(), coeffs.end());
  return Poly(std::move(c), parity);
}

Poly Poly::derivative() const {
  if (coeffs.size() <= 1) return Poly::constant(Real(precision()));
  std::vector<Real> c;
  c.reserve(coeffs.size() - 1);
  for (std::size_t i = 1; i < coeffs.size(); ++i) c.push_back(coeffs[i] * static_cast<long>(i));
  return Poly(std::move(c), flip(parity));
}

Poly Poly::divided_by_x() const {
  if (coeffs.empty() || !coeffs.front().is_zero()) {
    throw ParameterError("divided_by_x needs a vanishing constant term");
  }
  if (coeffs.size() == 1) return Poly::constant(Real(precision()));
  return Poly(std::vector<Real>(coeffs.begin() + 1, coeffs.end()), flip(parity));
}

Poly Poly::scaled(const Real& s) const {
  Poly r = *this;
  for (auto& c : r.coeffs) c *= s;
  return r;
}

Real Poly::max_abs_coeff() const {
  Real m(precision());
  for (const auto& c : coeffs) {
    Real a = abs(c);
    if (a > m) m = std::move(a);
  }
  return m;
}

Poly& Poly::operator+=(const Poly& q) {
  if (q.coeffs.size() > coeffs.size()) coeffs.resize(q.coeffs.size(), Real(q.precision()));
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) coeffs[i] += q.coeffs[i];
  if (parity != q.parity) parity = Parity::none;
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  if (q.coeffs.size() > coeffs.size()) coeffs.resize(q.coeffs.size(), Real(q.precision()));
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) coeffs[i] -= q.coeffs[i];
  if (parity != q.parity) parity = Parity::none;
  return *this;
}

Complex poly_eval(const Poly& p, const Complex& x) {
  Complex acc(x.precision());
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    acc *= x;
    acc.re += *it;
  }
  return acc;
}

Real poly_eval(const Poly& p, const Real& x) {
  Real acc(std::max(x.precision(), p.precision()));
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Real relative_poly_residual(const Poly& lhs, const Poly& rhs) {
  Poly diff = lhs - rhs;
  Real scale = max(lhs.max_abs_coeff(), rhs.max_abs_coeff());
  Real defect = diff.max_abs_coeff();
  if (scale.is_zero()) return defect;
  return defect / scale;
}

}  // namespace freudlab
