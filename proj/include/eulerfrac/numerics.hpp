#pragma once

// Exact rational arithmetic, Bernoulli numbers, special values of zeta and
// high-precision reference constants.

#include "eulerfrac/real.hpp"

#include <string>
#include <variant>

namespace eulerfrac {

/// Either an exact Rational or a Real approximation.
///
/// Arithmetic stays exact while both operands are exact; mixing in a Real
/// promotes the result to a Real at the Real operand's precision.
class Number {
 public:
  Number() : value_(Rational(0)) {}
  Number(Rational q) : value_(std::move(q)) { std::get<Rational>(value_).canonicalize(); }  // NOLINT(implicit)
  Number(Real r) : value_(std::move(r)) {}      // NOLINT(implicit)
  Number(long v) : value_(Rational(v)) {}       // NOLINT(implicit)
  Number(int v) : value_(Rational(v)) {}        // NOLINT(implicit)

  bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
  const Rational& exact() const;
  const Real& approx() const;
  /// Value as a Real; exact values are rounded to `digits`, approximate values
  /// are widened (never narrowed) to at least `digits`.
  Real to_real(int digits) const;

  bool is_zero() const;
  int sign() const;
  /// Canonical text: "p/q" for exact values, scientific notation otherwise.
  std::string to_string() const;

  friend Number operator+(const Number& a, const Number& b);
  friend Number operator-(const Number& a, const Number& b);
  friend Number operator*(const Number& a, const Number& b);
  /// Throws Error(undefined_approximant) on an exact zero divisor.
  friend Number operator/(const Number& a, const Number& b);
  Number operator-() const;

  /// Exact equality for exact values; bitwise value equality otherwise.
  friend bool operator==(const Number& a, const Number& b);

 private:
  std::variant<Rational, Real> value_;
};

/// Precision ceiling for constants (default 200 digits).
int max_precision() noexcept;
void set_max_precision(int digits) noexcept;

/// Bernoulli number B_m with B_1 = -1/2. Memoised; safe to call concurrently.
Rational bernoulli(unsigned m);

struct ZetaEven {
  Rational coefficient;
  int pi_power;
};

/// zeta(2n) = coefficient * pi^(2n).
ZetaEven zeta_even(unsigned n);

/// zeta(-n) = -B_{n+1}/(n+1).
Rational zeta_neg(unsigned n);

/// Euler-Mascheroni constant by harmonic sum minus log with an Euler-Maclaurin
/// tail. Throws Error(capability) above max_precision().
Real euler_gamma(int digits);

/// Gamma(s) for s > 0; exact factorial when s is a positive integer.
Number gamma_function(const Number& s, int digits);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace eulerfrac
