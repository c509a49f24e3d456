#include "eulerfrac/real.hpp"

#include "eulerfrac/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace eulerfrac {

mpfr_prec_t digits_to_bits(int digits) noexcept {
  const int d = std::max(digits, 1);
  return static_cast<mpfr_prec_t>(std::ceil(d * 3.321928094887362)) + 8;
}

Real::Real(Uninit, int digits) : digits_(std::max(digits, 1)) {
  mpfr_init2(value_, digits_to_bits(digits_));
}

Real::Real() : Real(Uninit{}, 30) { mpfr_set_zero(value_, 1); }

Real::Real(double value, int digits) : Real(Uninit{}, digits) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(long value, int digits) : Real(Uninit{}, digits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, int digits) : Real(Uninit{}, digits) {
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const BigInt& value, int digits) : Real(Uninit{}, digits) {
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real Real::parse(std::string_view text, int digits) {
  const std::string s(text);
  if (s.find('/') != std::string::npos) return Real(parse_rational(s), digits);
  Real r(Uninit{}, digits);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size() || !mpfr_number_p(r.value_))
    throw Error(ErrorKind::parameter, "not a real number: '" + s + "'");
  return r;
}

Real::Real(const Real& other) : Real(Uninit{}, other.digits_) {
  mpfr_set_prec(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : Real(Uninit{}, 1) {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_digits(int digits) const {
  Real r(Uninit{}, digits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
bool Real::is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
bool Real::is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
int Real::sign() const noexcept { return mpfr_sgn(value_); }

std::string Real::to_string(int significant) const {
  const int sig = significant > 0 ? significant : digits_;
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(sig - 1, 0), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

namespace {

int wider(const Real& a, const Real& b) { return std::max(a.digits(), b.digits()); }

}  // namespace

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& rhs) {
  if (rhs.digits_ > digits_) *this = with_digits(rhs.digits_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (rhs.digits_ > digits_) *this = with_digits(rhs.digits_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (rhs.digits_ > digits_) *this = with_digits(rhs.digits_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.digits_ > digits_) *this = with_digits(rhs.digits_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::add_si(long v) const {
  Real r(Uninit{}, digits_);
  mpfr_add_si(r.value_, value_, v, MPFR_RNDN);
  return r;
}

Real Real::mul_si(long v) const {
  Real r(Uninit{}, digits_);
  mpfr_mul_si(r.value_, value_, v, MPFR_RNDN);
  return r;
}

Real Real::div_si(long v) const {
  Real r(Uninit{}, digits_);
  mpfr_div_si(r.value_, value_, v, MPFR_RNDN);
  return r;
}

Real Real::si_div(long v) const {
  Real r(Uninit{}, digits_);
  mpfr_si_div(r.value_, v, value_, MPFR_RNDN);
  return r;
}

bool operator==(const Real& lhs, const Real& rhs) { return mpfr_equal_p(lhs.value_, rhs.value_) != 0; }

std::partial_ordering operator<=>(const Real& lhs, const Real& rhs) {
  if (mpfr_unordered_p(lhs.value_, rhs.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

#define EULERFRAC_UNARY(name, fn)            \
  Real name(const Real& x) {                 \
    Real r = x;                              \
    fn(r.get(), x.get(), MPFR_RNDN);         \
    return r;                                \
  }

EULERFRAC_UNARY(abs, mpfr_abs)
EULERFRAC_UNARY(sqrt, mpfr_sqrt)
EULERFRAC_UNARY(log, mpfr_log)
EULERFRAC_UNARY(log1p, mpfr_log1p)
EULERFRAC_UNARY(exp, mpfr_exp)
EULERFRAC_UNARY(expm1, mpfr_expm1)
EULERFRAC_UNARY(sinh, mpfr_sinh)
EULERFRAC_UNARY(cosh, mpfr_cosh)
EULERFRAC_UNARY(tgamma, mpfr_gamma)

#undef EULERFRAC_UNARY

Real pow(const Real& base, const Real& exponent) {
  Real r = base.with_digits(wider(base, exponent));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, long exponent) {
  Real r = base;
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

Real pi(int digits) {
  Real r(0L, digits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  const auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t.front() == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (valid_int(s)) return Rational(BigInt(s));
    // Terminating decimal, e.g. "2.5" or "0.125".
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string whole = s.substr(0, dot);
      const std::string frac = s.substr(dot + 1);
      bool neg = !whole.empty() && whole.front() == '-';
      if (neg) whole.erase(0, 1);
      if (whole.empty()) whole = "0";
      if (valid_int(whole) && (frac.empty() || valid_int(frac)) && frac.find('-') == std::string::npos) {
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Rational q(BigInt(whole) * scale + (frac.empty() ? BigInt(0) : BigInt(frac)), scale);
        q.canonicalize();
        return neg ? Rational(-q) : q;
      }
    }
    throw Error(ErrorKind::parameter, "not a rational number: '" + s + "'");
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw Error(ErrorKind::parameter, "not a rational number: '" + s + "'");
  BigInt d(den);
  if (d == 0) throw Error(ErrorKind::parameter, "zero denominator: '" + s + "'");
  Rational q(BigInt(num), d);
  q.canonicalize();
  return q;
}

}  // namespace eulerfrac
