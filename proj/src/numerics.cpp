#include "eulerfrac/numerics.hpp"

#include "eulerfrac/error.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <vector>

namespace eulerfrac {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::domain: return "domain";
    case ErrorKind::capability: return "capability";
    case ErrorKind::undefined_approximant: return "undefined_approximant";
    case ErrorKind::inconclusive: return "inconclusive";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::quadrature: return "quadrature";
    case ErrorKind::precondition: return "precondition";
  }
  return "unknown";
}

// ---------------------------------------------------------------- Number

const Rational& Number::exact() const {
  if (!is_exact()) throw Error(ErrorKind::domain, "number is not exact");
  return std::get<Rational>(value_);
}

const Real& Number::approx() const {
  if (is_exact()) throw Error(ErrorKind::domain, "number is exact");
  return std::get<Real>(value_);
}

Real Number::to_real(int digits) const {
  if (is_exact()) return Real(std::get<Rational>(value_), digits);
  const Real& r = std::get<Real>(value_);
  return r.digits() >= digits ? r : r.with_digits(digits);
}

bool Number::is_zero() const {
  return is_exact() ? sgn(std::get<Rational>(value_)) == 0 : std::get<Real>(value_).is_zero();
}

int Number::sign() const {
  return is_exact() ? sgn(std::get<Rational>(value_)) : std::get<Real>(value_).sign();
}

std::string Number::to_string() const {
  return is_exact() ? eulerfrac::to_string(std::get<Rational>(value_)) : std::get<Real>(value_).to_string();
}

namespace {

int real_digits(const Number& a, const Number& b) {
  int d = 0;
  if (!a.is_exact()) d = a.approx().digits();
  if (!b.is_exact()) d = std::max(d, b.approx().digits());
  return d;
}

}  // namespace

Number operator+(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Rational(a.exact() + b.exact());
  const int d = real_digits(a, b);
  return a.to_real(d) + b.to_real(d);
}

Number operator-(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Rational(a.exact() - b.exact());
  const int d = real_digits(a, b);
  return a.to_real(d) - b.to_real(d);
}

Number operator*(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return Rational(a.exact() * b.exact());
  const int d = real_digits(a, b);
  return a.to_real(d) * b.to_real(d);
}

Number operator/(const Number& a, const Number& b) {
  if (b.is_exact() && b.is_zero()) throw Error(ErrorKind::undefined_approximant, "division by exact zero");
  if (a.is_exact() && b.is_exact()) return Rational(a.exact() / b.exact());
  const int d = real_digits(a, b);
  return a.to_real(d) / b.to_real(d);
}

Number Number::operator-() const {
  if (is_exact()) return Rational(-std::get<Rational>(value_));
  return -std::get<Real>(value_);
}

bool operator==(const Number& a, const Number& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.exact() == b.exact();
  return a.approx() == b.approx();
}

// ---------------------------------------------------------------- config

namespace {
std::atomic<int> g_max_precision{200};
}

int max_precision() noexcept { return g_max_precision.load(); }
void set_max_precision(int digits) noexcept { g_max_precision.store(std::max(digits, 1)); }

// ---------------------------------------------------------------- integers

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// ---------------------------------------------------------------- Bernoulli

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli{Rational(1)};

}  // namespace

Rational bernoulli(unsigned m) {
  if (m >= 3 && m % 2 == 1) return Rational(0);
  std::lock_guard lock(g_bernoulli_mutex);
  // sum_{k=0}^{j} C(j+1, k) B_k = 0  =>  B_j = -(sum_{k<j} C(j+1,k) B_k)/(j+1)
  while (g_bernoulli.size() <= m) {
    const auto j = static_cast<unsigned>(g_bernoulli.size());
    Rational acc(0);
    for (unsigned k = 0; k < j; ++k) {
      if (sgn(g_bernoulli[k]) != 0) acc += Rational(binomial(j + 1, k)) * g_bernoulli[k];
    }
    Rational bj = -acc / (j + 1);
    bj.canonicalize();
    g_bernoulli.push_back(std::move(bj));
  }
  return g_bernoulli[m];
}

ZetaEven zeta_even(unsigned n) {
  if (n == 0) throw Error(ErrorKind::parameter, "zeta_even requires n >= 1");
  // zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!)
  Rational c = bernoulli(2 * n) * Rational(BigInt(1) << (2 * n)) / Rational(2 * factorial(2 * n));
  if (n % 2 == 0) c = -c;
  c.canonicalize();
  return {c, static_cast<int>(2 * n)};
}

Rational zeta_neg(unsigned n) {
  if (n == 0) throw Error(ErrorKind::parameter, "zeta_neg requires n >= 1");
  Rational r = -bernoulli(n + 1) / (n + 1);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- constants

Real euler_gamma(int digits) {
  if (digits < 1) throw Error(ErrorKind::parameter, "precision must be positive");
  if (digits > max_precision())
    throw Error(ErrorKind::capability, "requested precision " + std::to_string(digits) +
                                           " exceeds maximum " + std::to_string(max_precision()));
  const int wp = digits + 10;
  // gamma = H_N - log N - 1/(2N) + sum_{j>=1} B_{2j} / (2j N^{2j})
  const long n = 2L * digits + 10;
  Real h(0L, wp);
  for (long k = n; k >= 1; --k) h += Real(1L, wp) / k;
  Real result = h - log(Real(n, wp)) - Real(1L, wp) / (2 * n);

  const Real threshold = pow(Real(10L, wp), -(digits + 5));
  const Real inv_n2 = Real(1L, wp) / (Real(n, wp) * Real(n, wp));
  Real npow = inv_n2;
  for (unsigned j = 1; j < 400; ++j) {
    Real term = Real(bernoulli(2 * j), wp) * npow / static_cast<long>(2 * j);
    result += term;
    if (abs(term) < threshold) break;
    npow *= inv_n2;
  }
  return result.with_digits(digits);
}

Number gamma_function(const Number& s, int digits) {
  if (s.sign() <= 0) throw Error(ErrorKind::domain, "Gamma(s) requires s > 0");
  if (s.is_exact() && s.exact().get_den() == 1 && s.exact().get_num().fits_ulong_p()) {
    const unsigned long n = s.exact().get_num().get_ui();
    if (n <= 100000) return Rational(factorial(static_cast<unsigned>(n - 1)));
  }
  return tgamma(s.to_real(digits + 5)).with_digits(digits);
}

}  // namespace eulerfrac
