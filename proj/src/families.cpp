#include "eulerfrac/families.hpp"

#include "eulerfrac/error.hpp"

#include <string>

namespace eulerfrac {

namespace {

bool is_integer(const Number& x) { return x.is_exact() && x.exact().get_den() == 1; }

/// base^s, exact when s is an integer.
Number power(const Number& base, const Number& s, int digits) {
  if (is_integer(s) && base.is_exact() && s.exact().get_num().fits_slong_p()) {
    const long e = s.exact().get_num().get_si();
    Rational b = base.exact();
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    mpz_pow_ui(den.get_mpz_t(), b.get_den().get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    Rational r = e < 0 ? Rational(den, num) : Rational(num, den);
    r.canonicalize();
    return r;
  }
  return pow(base.to_real(digits), s.to_real(digits));
}

Number parse_number(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    return Real::parse(text, 40);
  }
}

/// Power series reciprocal: c = 1/g, g_0 != 0.
std::vector<Number> reciprocal(const std::vector<Number>& g) {
  std::vector<Number> c(g.size());
  c[0] = Number(1) / g[0];
  for (std::size_t j = 1; j < g.size(); ++j) {
    Number acc = 0;
    for (std::size_t i = 1; i <= j; ++i) acc = acc + g[i] * c[j - i];
    c[j] = -(acc / g[0]);
  }
  return c;
}

/// (-1)^j / j!
Rational exp_neg_coefficient(std::size_t j) {
  Rational r(1, factorial(static_cast<unsigned>(j)));
  r.canonicalize();
  return j % 2 == 0 ? r : Rational(-r);
}

void attach_tail(Family& f) {
  const AsymptoticKernel kernel = asymptotic_kernel(f);
  f.rec.ratio_estimate = [kernel](long n, int digits) { return kernel.ratio(n, digits); };
}

}  // namespace

const char* to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::log: return "log";
    case FamilyKind::zeta: return "zeta";
    case FamilyKind::polylog: return "polylog";
    case FamilyKind::gamma: return "gamma";
    case FamilyKind::factorial: return "factorial";
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "log") return FamilyKind::log;
  if (name == "zeta") return FamilyKind::zeta;
  if (name == "polylog") return FamilyKind::polylog;
  if (name == "gamma") return FamilyKind::gamma;
  if (name == "factorial") return FamilyKind::factorial;
  throw Error(ErrorKind::parameter, "unknown family '" + std::string(name) + "'");
}

Family log_family(long k) {
  if (k < 1) throw Error(ErrorKind::parameter, "log family requires integer k >= 1");
  Family f;
  f.kind = FamilyKind::log;
  f.k = k;
  f.params = {{"k", std::to_string(k)}};
  f.rec.k1 = k;
  f.rec.k2 = 1;
  f.rec.n0 = 0;
  f.rec.mu = [](long n, int) -> Number { return Rational(1, n + 1); };
  f.rec.mu_ratio = [](long n, int) -> Number { return Rational(n + 1, n + 2); };
  f.target_description = "log(1 + 1/k) = 1/(k + r_0)";
  attach_tail(f);
  return f;
}

Family zeta_family(const Number& s) {
  if ((s - Number(1)).sign() <= 0) throw Error(ErrorKind::parameter, "zeta family requires s > 1");
  Family f;
  f.kind = FamilyKind::zeta;
  f.s = s;
  f.params = {{"s", s.to_string()}};
  f.rec.k1 = 1;
  f.rec.k2 = -1;
  f.rec.n0 = 0;
  f.rec.mu = [s](long n, int digits) -> Number {
    return gamma_function(s, digits) / power(Number(n + 1), s, digits);
  };
  f.rec.mu_ratio = [s](long n, int digits) -> Number {
    return power(Number(Rational(n + 1, n + 2)), s, digits);
  };
  f.target_description = "r_0 = 1 - 1/zeta(s)";
  attach_tail(f);
  return f;
}

Family polylog_family(const Number& s, const Number& z) {
  if (z == Number(1)) return zeta_family(s);
  if ((s - Number(1)).sign() <= 0) throw Error(ErrorKind::parameter, "polylog family requires s > 1");
  if (z.sign() <= 0 || (z - Number(1)).sign() >= 0)
    throw Error(ErrorKind::parameter, "polylog family requires 0 < z < 1");
  Family f;
  f.kind = FamilyKind::polylog;
  f.s = s;
  f.z = z;
  f.params = {{"s", s.to_string()}, {"z", z.to_string()}};
  f.rec.k1 = 1;
  f.rec.k2 = -z;
  f.rec.n0 = 0;
  f.rec.mu = [s, z](long n, int digits) -> Number {
    return z * gamma_function(s, digits) / power(Number(n + 1), s, digits);
  };
  f.rec.mu_ratio = [s](long n, int digits) -> Number {
    return power(Number(Rational(n + 1, n + 2)), s, digits);
  };
  f.target_description = "r_0 = (Li_s(z) - z)/(z Li_s(z))";
  attach_tail(f);
  return f;
}

Family gamma_family() {
  Family f;
  f.kind = FamilyKind::gamma;
  f.rec.k1 = 1;
  f.rec.k2 = 1;
  f.rec.n0 = 1;
  f.rec.mu = [](long n, int) -> Number {
    if (n < 1) throw Error(ErrorKind::parameter, "gamma family mu_n needs n >= 1");
    Rational m = bernoulli(static_cast<unsigned>(2 * n)) / (2 * n);
    m.canonicalize();
    return n % 2 == 1 ? m : Rational(-m);
  };
  f.target_description = "r_1 = (7/12 - gamma)/(gamma - 1/2) = 1/(12(gamma - 1/2)) - 1; fraction diverges to -1";
  return f;
}

Family factorial_family(const Number& s) {
  if (s.sign() < 0) throw Error(ErrorKind::parameter, "factorial family requires s >= 0");
  Family f;
  f.kind = FamilyKind::factorial;
  f.s = s;
  f.params = {{"s", s.to_string()}};
  f.rec.k1 = 1;
  f.rec.k2 = 1;
  f.rec.n0 = 0;
  f.rec.mu = [s](long n, int digits) -> Number { return gamma_function(s + Number(n + 1), digits); };
  f.rec.mu_ratio = [s](long n, int) -> Number { return s + Number(n + 1); };
  f.target_description = "I_0 = int_0^inf x^s e^{-x}/(1+x) dx; fraction diverges to -1";
  return f;
}

Family make_family(FamilyKind kind, const std::map<std::string, std::string>& params) {
  const auto allowed = [&](std::initializer_list<const char*> names) {
    for (const auto& [key, value] : params) {
      bool ok = false;
      for (const char* n : names) ok = ok || key == n;
      if (!ok) throw Error(ErrorKind::parameter, "unknown parameter '" + key + "' for family " + to_string(kind));
    }
  };
  const auto get = [&](const char* key, const char* fallback) -> Number {
    const auto it = params.find(key);
    if (it != params.end()) return parse_number(it->second);
    if (fallback == nullptr)
      throw Error(ErrorKind::parameter, std::string("missing parameter '") + key + "' for family " + to_string(kind));
    return parse_number(fallback);
  };
  switch (kind) {
    case FamilyKind::log: {
      allowed({"k"});
      const Number k = get("k", "1");
      if (!is_integer(k) || !k.exact().get_num().fits_slong_p())
        throw Error(ErrorKind::parameter, "log family requires integer k >= 1");
      return log_family(k.exact().get_num().get_si());
    }
    case FamilyKind::zeta:
      allowed({"s"});
      return zeta_family(get("s", "2"));
    case FamilyKind::polylog:
      allowed({"s", "z"});
      return polylog_family(get("s", "2"), get("z", "1/2"));
    case FamilyKind::gamma:
      allowed({});
      return gamma_family();
    case FamilyKind::factorial:
      allowed({"s"});
      return factorial_family(get("s", "0"));
  }
  throw Error(ErrorKind::parameter, "unknown family");
}

Rational gamma_b(long n) {
  if (n < 1) throw Error(ErrorKind::parameter, "gamma coefficients start at n = 1");
  Rational b = Rational(1) + Rational(n + 1) * bernoulli(static_cast<unsigned>(2 * n)) /
                                 (Rational(n) * bernoulli(static_cast<unsigned>(2 * n + 2)));
  b.canonicalize();
  return b;
}

Rational gamma_a(long n) {
  Rational a = gamma_b(n) - 1;
  a.canonicalize();
  return a;
}

Number family_step(const Family& family, long n, const Number& r_next, int digits) {
  const auto guard = [n](const Number& den) {
    if (den.is_zero()) throw Error(ErrorKind::undefined_approximant, "zero denominator at n = " + std::to_string(n));
  };
  switch (family.kind) {
    case FamilyKind::log: {
      // r_n = k(n+1)/(k(n+2) - (n+1) + (n+2) r_{n+1})
      const Number& k = family.k;
      const Number den = k * Number(n + 2) - Number(n + 1) + Number(n + 2) * r_next;
      guard(den);
      return k * Number(n + 1) / den;
    }
    case FamilyKind::zeta: {
      // r_n = (n+1)^s/((n+2)^s + (n+1)^s - (n+2)^s r_{n+1})
      const Number a = power(Number(n + 1), family.s, digits);
      const Number b = power(Number(n + 2), family.s, digits);
      const Number den = b + a - b * r_next;
      guard(den);
      return a / den;
    }
    case FamilyKind::polylog: {
      // r_n = (n+1)^s/(z(n+1)^s + (n+2)^s - z(n+2)^s r_{n+1})
      const Number a = power(Number(n + 1), family.s, digits);
      const Number b = power(Number(n + 2), family.s, digits);
      const Number den = family.z * a + b - family.z * b * r_next;
      guard(den);
      return a / den;
    }
    case FamilyKind::gamma: {
      // r_n = -n B_{2n+2}/(n B_{2n+2} + (n+1) B_{2n} + (n+1) B_{2n} r_{n+1})
      const Number hi = Rational(Rational(n) * bernoulli(static_cast<unsigned>(2 * n + 2)));
      const Number lo = Rational(Rational(n + 1) * bernoulli(static_cast<unsigned>(2 * n)));
      const Number den = hi + lo + lo * r_next;
      guard(den);
      return -hi / den;
    }
    case FamilyKind::factorial: {
      // r_n = (s+n+1)/(r_{n+1} - (s+n))
      const Number den = r_next - (family.s + Number(n));
      guard(den);
      return (family.s + Number(n + 1)) / den;
    }
  }
  throw Error(ErrorKind::parameter, "unknown family");
}

Number family_unroll(const Family& family, long n, std::size_t depth, int digits) {
  Number r = 0;
  for (std::size_t i = depth; i-- > 0;) r = family_step(family, n + static_cast<long>(i), r, digits);
  return r;
}

GeneralizedCF closed_form_cf(const Family& family) {
  GeneralizedCF::Options opts;
  switch (family.kind) {
    case FamilyKind::log: {
      const Number k = family.k;
      opts.name = "log(1+1/k)";
      return GeneralizedCF(
          Number(0),
          [k](std::size_t n, int) -> Term {
            if (n == 0) return Term{k, k};
            const Number nn = static_cast<long>(n);
            return Term{k * nn * nn, k * (nn + Number(1)) - nn};
          },
          opts);
    }
    case FamilyKind::zeta: {
      const Number s = family.s;
      opts.name = "zeta(s)";
      return GeneralizedCF(
          Number(0),
          [s](std::size_t n, int digits) -> Term {
            if (n == 0) return Term{Number(1), Number(1)};
            const Number ns = power(Number(static_cast<long>(n)), s, digits);
            const Number n1s = power(Number(static_cast<long>(n) + 1), s, digits);
            return Term{-(ns * ns), ns + n1s};
          },
          opts);
    }
    case FamilyKind::polylog: {
      const Number s = family.s;
      const Number z = family.z;
      opts.name = "Li_s(z)";
      return GeneralizedCF(
          Number(0),
          [s, z](std::size_t n, int digits) -> Term {
            if (n == 0) return Term{Number(1), Number(1) / z};
            if (n == 1) return Term{Number(-1), z + power(Number(2), s, digits)};
            const Number ns = power(Number(static_cast<long>(n)), s, digits);
            const Number n1s = power(Number(static_cast<long>(n) + 1), s, digits);
            return Term{-(z * ns * ns), z * ns + n1s};
          },
          opts);
    }
    case FamilyKind::gamma: {
      opts.name = "r_1";
      opts.fixed_point = Number(-1);
      return GeneralizedCF(
          Number(0),
          [](std::size_t n, int) -> Term {
            const long m = static_cast<long>(n);
            if (m == 0) return Term{Number(-1), gamma_b(1)};
            return Term{Number(Rational(-gamma_a(m))), gamma_b(m + 1)};
          },
          opts);
    }
    case FamilyKind::factorial:
      break;
  }
  throw Error(ErrorKind::parameter, std::string("no closed-form fraction for family ") + to_string(family.kind));
}

Real AsymptoticKernel::value(long n, int digits) const {
  const Real base(n + beta, digits);
  const Real inv = Real(1L, digits) / base;
  Real sum(0L, digits);
  Real scale(1L, digits);  // (alpha)_j / (n+beta)^j
  const Real a = alpha.to_real(digits);
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    sum += coefficients[j].to_real(digits) * scale;
    scale *= (a + static_cast<long>(j)) * inv;
  }
  return sum * pow(base, -a);
}

Real AsymptoticKernel::ratio(long n, int digits) const { return value(n + 1, digits) / value(n, digits); }

AsymptoticKernel asymptotic_kernel(const Family& family, std::size_t terms) {
  if (terms < 1) throw Error(ErrorKind::parameter, "kernel expansion needs at least one term");
  AsymptoticKernel kernel;
  std::vector<Number> g(terms);
  switch (family.kind) {
    case FamilyKind::log:
      // 1/(k + e^{-t})
      for (std::size_t j = 0; j < terms; ++j) g[j] = exp_neg_coefficient(j);
      g[0] = g[0] + family.k;
      kernel.alpha = 1;
      break;
    case FamilyKind::zeta:
      // x/(1 - e^{-x}) = 1/((1 - e^{-x})/x)
      for (std::size_t j = 0; j < terms; ++j) g[j] = Rational(-exp_neg_coefficient(j + 1));
      kernel.alpha = family.s - Number(1);
      break;
    case FamilyKind::polylog:
      // 1/(1/z - e^{-x})
      for (std::size_t j = 0; j < terms; ++j) g[j] = Rational(-exp_neg_coefficient(j));
      g[0] = g[0] + Number(1) / family.z;
      kernel.alpha = family.s;
      break;
    case FamilyKind::gamma:
    case FamilyKind::factorial:
      throw Error(ErrorKind::parameter, std::string("no convergent tail expansion for family ") + to_string(family.kind));
  }
  kernel.coefficients = reciprocal(g);
  kernel.beta = 1;
  return kernel;
}

}  // namespace eulerfrac
