#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace eulerfrac {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Binary precision used for a requested number of significant decimal digits.
/// Includes a few guard bits on top of ceil(digits * log2(10)).
mpfr_prec_t digits_to_bits(int digits) noexcept;

/// Arbitrary-precision floating value with an explicit decimal precision.
///
/// Thin RAII wrapper over an MPFR number. Binary operations produce a result
/// at the larger of the two operand precisions; precision is never reduced
/// implicitly. All rounding is to nearest.
class Real {
 public:
  /// Zero at 30 digits.
  Real();
  Real(double value, int digits);
  Real(long value, int digits);
  Real(int value, int digits) : Real(static_cast<long>(value), digits) {}
  Real(const Rational& value, int digits);
  Real(const BigInt& value, int digits);

  /// Parses decimal or scientific notation. Throws Error(parameter) on junk.
  static Real parse(std::string_view text, int digits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  int digits() const noexcept { return digits_; }
  /// Same value rounded to a new precision.
  Real with_digits(int digits) const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  double to_double() const;
  bool is_zero() const noexcept;
  bool is_finite() const noexcept;
  int sign() const noexcept;

  /// Scientific notation with `significant` digits (defaults to digits()).
  std::string to_string(int significant = 0) const;

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  template <std::integral I>
  Real& operator+=(I rhs) { return *this = add_si(static_cast<long>(rhs)); }
  template <std::integral I>
  Real& operator-=(I rhs) { return *this = add_si(-static_cast<long>(rhs)); }
  template <std::integral I>
  Real& operator*=(I rhs) { return *this = mul_si(static_cast<long>(rhs)); }
  template <std::integral I>
  Real& operator/=(I rhs) { return *this = div_si(static_cast<long>(rhs)); }

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }

  template <std::integral I>
  friend Real operator+(const Real& lhs, I rhs) { return lhs.add_si(static_cast<long>(rhs)); }
  template <std::integral I>
  friend Real operator-(const Real& lhs, I rhs) { return lhs.add_si(-static_cast<long>(rhs)); }
  template <std::integral I>
  friend Real operator*(const Real& lhs, I rhs) { return lhs.mul_si(static_cast<long>(rhs)); }
  template <std::integral I>
  friend Real operator/(const Real& lhs, I rhs) { return lhs.div_si(static_cast<long>(rhs)); }
  template <std::integral I>
  friend Real operator+(I lhs, const Real& rhs) { return rhs.add_si(static_cast<long>(lhs)); }
  template <std::integral I>
  friend Real operator-(I lhs, const Real& rhs) { return (-rhs).add_si(static_cast<long>(lhs)); }
  template <std::integral I>
  friend Real operator*(I lhs, const Real& rhs) { return rhs.mul_si(static_cast<long>(lhs)); }
  template <std::integral I>
  friend Real operator/(I lhs, const Real& rhs) { return rhs.si_div(static_cast<long>(lhs)); }

  friend bool operator==(const Real& lhs, const Real& rhs);
  friend std::partial_ordering operator<=>(const Real& lhs, const Real& rhs);
  template <std::integral I>
  friend bool operator==(const Real& lhs, I rhs) { return mpfr_cmp_si(lhs.value_, static_cast<long>(rhs)) == 0; }
  template <std::integral I>
  friend std::partial_ordering operator<=>(const Real& lhs, I rhs) {
    return lhs <=> Real(static_cast<long>(rhs), lhs.digits_);
  }

 private:
  struct Uninit {};
  Real(Uninit, int digits);

  Real add_si(long v) const;
  Real mul_si(long v) const;
  Real div_si(long v) const;
  Real si_div(long v) const;

  mpfr_t value_;
  int digits_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
/// Gamma function via MPFR.
Real tgamma(const Real& x);
Real pi(int digits);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

/// Exact rational to canonical "p/q" (or "p" when q = 1).
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace eulerfrac
