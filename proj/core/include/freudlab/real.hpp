#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace freudlab {

/// Mantissa width in bits. Carried explicitly by every computation.
struct Precision {
  long bits;

  constexpr explicit Precision(long b) : bits(b) {}
  constexpr auto operator<=>(const Precision&) const = default;

  /// Number of significant decimal digits needed to represent `bits`.
  int decimal_digits() const;
};

inline constexpr Precision kDefaultPrecision{256};

/// Arbitrary-precision binary floating-point real backed by MPFR.
///
/// Every value owns its precision. Binary operations produce a result at the
/// larger of the operand precisions, rounded to nearest. Integer operands adopt
/// the precision of the Real they are combined with.
class Real {
 public:
  Real();
  explicit Real(Precision p);
  Real(long value, Precision p);

  static Real from_string(std::string_view text, Precision p);
  static Real from_double(double value, Precision p);
  static Real pi(Precision p);
  /// 2^exponent at precision p.
  static Real pow2(long exponent, Precision p);
  /// Machine epsilon 2^(1-bits).
  static Real epsilon(Precision p);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Precision precision() const { return Precision{mpfr_get_prec(v_)}; }
  Real with_precision(Precision p) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;
  /// Scientific notation with enough digits for the value's precision.
  std::string to_string() const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  Real operator-() const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(long a, const Real& b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  void ensure_init(Precision p);

  mpfr_t v_;
};

// Integer overloads for every integral type, so that `x * n` with an int does
// not go through an ambiguous conversion.
template <std::integral I>
Real operator+(const Real& a, I b) { return a + static_cast<long>(b); }
template <std::integral I>
Real operator-(const Real& a, I b) { return a - static_cast<long>(b); }
template <std::integral I>
Real operator*(const Real& a, I b) { return a * static_cast<long>(b); }
template <std::integral I>
Real operator/(const Real& a, I b) { return a / static_cast<long>(b); }
template <std::integral I>
Real operator+(I a, const Real& b) { return static_cast<long>(a) + b; }
template <std::integral I>
Real operator-(I a, const Real& b) { return static_cast<long>(a) - b; }
template <std::integral I>
Real operator*(I a, const Real& b) { return static_cast<long>(a) * b; }
template <std::integral I>
Real operator/(I a, const Real& b) { return static_cast<long>(a) / b; }

Real sqrt(const Real& x);
Real abs(const Real& x);
/// Principal k-th root of a nonnegative value.
Real root(const Real& x, unsigned long k);
Real pow(const Real& x, long e);
Real log(const Real& x);
Real exp(const Real& x);
Real hypot(const Real& a, const Real& b);
const Real& max(const Real& a, const Real& b);
const Real& min(const Real& a, const Real& b);

/// |a - b| / max(|a|, |b|); zero when both are zero.
Real relative_difference(const Real& a, const Real& b);

}  // namespace freudlab
