#include "eulerfrac/oracle.hpp"

#include "eulerfrac/error.hpp"

#include <string>

namespace eulerfrac {

namespace {

constexpr int kGuard = 10;

Real neg_power(const Real& base, const Number& s, int digits) {
  if (s.is_exact() && s.exact().get_den() == 1 && s.exact().get_num().fits_slong_p())
    return pow(base, -s.exact().get_num().get_si());
  return pow(base, -s.to_real(digits));
}

void require_positive(const Number& x, const char* what) {
  if (x.sign() <= 0) throw Error(ErrorKind::domain, std::string(what) + " must be positive");
}

}  // namespace

Real hurwitz_zeta(const Number& s, const Number& a, int digits) {
  if ((s - Number(1)).sign() <= 0) throw Error(ErrorKind::domain, "hurwitz_zeta requires s > 1");
  require_positive(a, "hurwitz_zeta shift a");
  const int wp = digits + kGuard;
  const Real sr = s.to_real(wp);
  const Real ar = a.to_real(wp);
  const Real eps = pow(Real(10L, wp), -(digits + 3));

  const long m = digits + 20;
  Real sum(0L, wp);
  for (long k = m - 1; k >= 0; --k) sum += neg_power(ar + k, s, wp);

  // Remainder sum_{k>=m} f(k+a), f(x) = x^{-s}:
  //   int_N^inf f + f(N)/2 - sum_j B_{2j}/(2j)! f^{(2j-1)}(N),  N = m + a
  // with f^{(2j-1)}(N) = -(s)_{2j-1} N^{-s-2j+1}.
  const Real n = ar + m;
  const Real n_pow = neg_power(n, s, wp);
  Real tail = n_pow * n / (sr - 1) + n_pow / 2;
  Real rising = sr;  // (s)_{2j-1}
  Real npow = n_pow / n;
  const Real inv_n2 = Real(1L, wp) / (n * n);
  for (unsigned j = 1; j < 200; ++j) {
    const Real term = Real(bernoulli(2 * j), wp) / Real(factorial(2 * j), wp) * rising * npow;
    tail += term;
    if (abs(term) < eps * abs(sum)) break;
    rising *= (sr + static_cast<long>(2 * j - 1)) * (sr + static_cast<long>(2 * j));
    npow *= inv_n2;
  }
  return (sum + tail).with_digits(digits);
}

Real lerch_phi(const Number& z, const Number& s, const Number& a, int digits) {
  if (z.sign() <= 0 || (z - Number(1)).sign() >= 0) throw Error(ErrorKind::domain, "lerch_phi requires 0 < z < 1");
  if ((s - Number(1)).sign() <= 0) throw Error(ErrorKind::domain, "lerch_phi requires s > 1");
  require_positive(a, "lerch_phi shift a");
  const int wp = digits + kGuard;
  const Real zr = z.to_real(wp);
  const Real ar = a.to_real(wp);
  const Real eps = pow(Real(10L, wp), -(digits + 3));
  const Real one_minus_z = Real(1L, wp) - zr;

  Real sum(0L, wp);
  Real zk(1L, wp);
  for (long k = 0;; ++k) {
    const Real term = zk * neg_power(ar + k, s, wp);
    sum += term;
    zk *= zr;
    // Remaining terms are bounded by z^{k+1} (k+1+a)^{-s} / (1 - z).
    const Real bound = zk * neg_power(ar + (k + 1), s, wp) / one_minus_z;
    if (bound < eps * abs(sum)) break;
    if (k > 1000000) throw Error(ErrorKind::domain, "lerch_phi series did not settle");
  }
  return sum.with_digits(digits);
}

Real polylog(const Number& s, const Number& z, int digits) {
  return (z.to_real(digits + kGuard) * lerch_phi(z, s, Number(1), digits + kGuard)).with_digits(digits);
}

Number truncated_zeta(const Number& s, long m, int digits) {
  Number sum = 0;
  const bool exact = s.is_exact() && s.exact().get_den() == 1;
  for (long k = 1; k <= m; ++k) {
    if (exact) {
      BigInt p;
      mpz_pow_ui(p.get_mpz_t(), BigInt(k).get_mpz_t(), s.exact().get_num().get_ui());
      sum = sum + Number(Rational(BigInt(1), p));
    } else {
      sum = sum + Number(neg_power(Real(k, digits + kGuard), s, digits + kGuard));
    }
  }
  return sum;
}

Number truncated_polylog(const Number& s, const Number& z, long m, int digits) {
  Number sum = 0;
  Number zj = 1;
  const bool exact = s.is_exact() && s.exact().get_den() == 1 && z.is_exact();
  for (long j = 1; j <= m; ++j) {
    zj = zj * z;
    if (exact) {
      BigInt p;
      mpz_pow_ui(p.get_mpz_t(), BigInt(j).get_mpz_t(), s.exact().get_num().get_ui());
      sum = sum + zj * Number(Rational(BigInt(1), p));
    } else {
      sum = sum + zj * Number(neg_power(Real(j, digits + kGuard), s, digits + kGuard));
    }
  }
  return sum;
}

Integrand family_integrand(const Family& family, long n, int digits) {
  const int wp = digits + kGuard;
  switch (family.kind) {
    case FamilyKind::log: {
      const Real k = family.k.to_real(wp);
      return [k, n](const Real& x) { return pow(x, n) / (k + x); };
    }
    case FamilyKind::zeta: {
      const Real sm1 = family.s.to_real(wp) - 1;
      return [sm1, n](const Real& x) { return exp(-(x * n)) * pow(x, sm1) / expm1(x); };
    }
    case FamilyKind::polylog: {
      const Real sm1 = family.s.to_real(wp) - 1;
      const Real z = family.z.to_real(wp);
      // 1/(e^x/z - 1) = z/(e^x - z)
      return [sm1, z, n](const Real& x) { return exp(-(x * n)) * pow(x, sm1) * z / (exp(x) - z); };
    }
    case FamilyKind::gamma: {
      if (n < 1) throw Error(ErrorKind::parameter, "gamma family integral needs n >= 1");
      const Real two_pi = pi(wp) * 2;
      return [two_pi, n](const Real& x) {
        return pow(x, 2 * n - 1) * 2 / ((x * x + 1) * expm1(two_pi * x));
      };
    }
    case FamilyKind::factorial: {
      const Real p = family.s.to_real(wp) + n;
      return [p](const Real& x) { return pow(x, p) * exp(-x) / (x + 1); };
    }
  }
  throw Error(ErrorKind::parameter, "unknown family");
}

Real I_quadrature(const Family& family, long n, int digits) {
  if (n < family.n0()) throw Error(ErrorKind::parameter, "I_n requested below the family start index");
  const Integrand f = family_integrand(family, n, digits);
  if (family.kind == FamilyKind::log) return integrate_finite(f, digits);
  return integrate_halfline(f, digits);
}

Real I_value(const Family& family, long n, int digits) {
  if (n < family.n0()) throw Error(ErrorKind::parameter, "I_n requested below the family start index");
  const int wp = digits + kGuard;
  switch (family.kind) {
    case FamilyKind::log:
    case FamilyKind::factorial:
      return I_quadrature(family, n, digits);
    case FamilyKind::zeta:
      return (gamma_function(family.s, wp).to_real(wp) * hurwitz_zeta(family.s, Number(n + 1), wp)).with_digits(digits);
    case FamilyKind::polylog:
      return (gamma_function(family.s, wp).to_real(wp) * family.z.to_real(wp) *
              lerch_phi(family.z, family.s, Number(n + 1), wp))
          .with_digits(digits);
    case FamilyKind::gamma: {
      Real value = euler_gamma(wp) - Real(Rational(1, 2), wp);
      for (long m = 1; m < n; ++m) value = family.rec.mu(m, wp).to_real(wp) - value;
      return value.with_digits(digits);
    }
  }
  throw Error(ErrorKind::parameter, "unknown family");
}

IOracle oracle_for(const Family& family) {
  return [family](long n, int digits) { return I_value(family, n, digits); };
}

IOracle quadrature_oracle_for(const Family& family) {
  return [family](long n, int digits) { return I_quadrature(family, n, digits); };
}

Real reference_ratio(const Family& family, int digits) {
  const long n0 = family.n0();
  return I_value(family, n0 + 1, digits + 5).with_digits(digits + 5) / I_value(family, n0, digits + 5);
}

}  // namespace eulerfrac
