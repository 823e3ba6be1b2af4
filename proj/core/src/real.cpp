#include "freudlab/real.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "freudlab/error.hpp"

namespace freudlab {

int Precision::decimal_digits() const {
  return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30102999566398120)) + 1;
}

namespace {

mpfr_prec_t larger(mpfr_srcptr a, mpfr_srcptr b) {
  return std::max(mpfr_get_prec(a), mpfr_get_prec(b));
}

}  // namespace

Real::Real() : Real(Precision{64}) {}

Real::Real(Precision p) {
  if (p.bits < MPFR_PREC_MIN || p.bits > MPFR_PREC_MAX) {
    throw ParameterError("precision out of range: " + std::to_string(p.bits));
  }
  mpfr_init2(v_, p.bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, Precision p) : Real(p) { mpfr_set_si(v_, value, MPFR_RNDN); }

Real Real::from_string(std::string_view text, Precision p) {
  Real r(p);
  std::string s(text);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw ParameterError("not a decimal number: '" + s + "'");
  }
  return r;
}

Real Real::from_double(double value, Precision p) {
  Real r(p);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

Real Real::pi(Precision p) {
  Real r(p);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow2(long exponent, Precision p) {
  Real r(1, p);
  mpfr_mul_2si(r.v_, r.v_, exponent, MPFR_RNDN);
  return r;
}

Real Real::epsilon(Precision p) { return pow2(1 - p.bits, p); }

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

// A moved-from Real has a null limb pointer; it may only be destroyed or
// assigned to.
Real::Real(Real&& other) noexcept {
  v_[0] = other.v_[0];
  other.v_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  ensure_init(other.precision());
  if (mpfr_get_prec(v_) != mpfr_get_prec(other.v_)) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
  }
  mpfr_set(v_, other.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this == &other) return *this;
  if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
  v_[0] = other.v_[0];
  other.v_[0]._mpfr_d = nullptr;
  return *this;
}

Real::~Real() {
  if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
}

void Real::ensure_init(Precision p) {
  if (v_[0]._mpfr_d == nullptr) {
    mpfr_init2(v_, p.bits);
  }
}

Real Real::with_precision(Precision p) const {
  Real r(p);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  if (mpfr_zero_p(v_)) return "0";
  if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string Real::to_string() const { return to_string(precision().decimal_digits()); }

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

#define FREUDLAB_COMPOUND(op, fn)                                   \
  Real& Real::operator op(const Real& rhs) {                        \
    if (mpfr_get_prec(rhs.v_) > mpfr_get_prec(v_)) {                \
      mpfr_prec_round(v_, mpfr_get_prec(rhs.v_), MPFR_RNDN);        \
    }                                                               \
    fn(v_, v_, rhs.v_, MPFR_RNDN);                                  \
    return *this;                                                   \
  }

FREUDLAB_COMPOUND(+=, mpfr_add)
FREUDLAB_COMPOUND(-=, mpfr_sub)
FREUDLAB_COMPOUND(*=, mpfr_mul)
FREUDLAB_COMPOUND(/=, mpfr_div)
#undef FREUDLAB_COMPOUND

Real& Real::operator+=(long rhs) {
  mpfr_add_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(long rhs) {
  mpfr_sub_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long rhs) {
  mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long rhs) {
  mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

#define FREUDLAB_BINARY(op, fn)                              \
  Real operator op(const Real& a, const Real& b) {           \
    Real r(Precision{larger(a.v_, b.v_)});                   \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                         \
    return r;                                                \
  }

FREUDLAB_BINARY(+, mpfr_add)
FREUDLAB_BINARY(-, mpfr_sub)
FREUDLAB_BINARY(*, mpfr_mul)
FREUDLAB_BINARY(/, mpfr_div)
#undef FREUDLAB_BINARY

#define FREUDLAB_BINARY_SI(op, fn)                           \
  Real operator op(const Real& a, long b) {                  \
    Real r(a.precision());                                   \
    fn(r.v_, a.v_, b, MPFR_RNDN);                            \
    return r;                                                \
  }

FREUDLAB_BINARY_SI(+, mpfr_add_si)
FREUDLAB_BINARY_SI(-, mpfr_sub_si)
FREUDLAB_BINARY_SI(*, mpfr_mul_si)
FREUDLAB_BINARY_SI(/, mpfr_div_si)
#undef FREUDLAB_BINARY_SI

Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real root(const Real& x, unsigned long k) {
  Real r(x.precision());
  mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long e) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

const Real& max(const Real& a, const Real& b) { return a < b ? b : a; }
const Real& min(const Real& a, const Real& b) { return b < a ? b : a; }

Real relative_difference(const Real& a, const Real& b) {
  Real scale = max(abs(a), abs(b));
  Real diff = abs(a - b);
  if (scale.is_zero()) return diff;
  return diff / scale;
}

}  // namespace freudlab
