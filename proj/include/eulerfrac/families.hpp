#pragma once

// The five concrete integral families: log, zeta, polylog, gamma, factorial.

#include "eulerfrac/recurrence.hpp"

#include <map>
#include <string>
#include <string_view>

namespace eulerfrac {

enum class FamilyKind { log, zeta, polylog, gamma, factorial };

const char* to_string(FamilyKind kind) noexcept;
FamilyKind parse_family_kind(std::string_view name);

struct Family {
  FamilyKind kind;
  /// Canonical parameter text, e.g. {"k": "1"} or {"s": "2", "z": "1/2"}.
  std::map<std::string, std::string> params;
  IntegralRecurrence rec;
  std::string target_description;

  // Parameter values; only those relevant to `kind` are meaningful.
  Number k = 1;
  Number s = 0;
  Number z = 1;

  std::string name() const { return to_string(kind); }
  long n0() const { return rec.n0; }
};

/// I_n = int_0^1 x^n/(k+x) dx; k I_n + I_{n+1} = 1/(n+1); log(1+1/k) = 1/(k + r_0).
Family log_family(long k);
/// I_n = int_0^inf e^{-nx} x^{s-1}/(e^x-1) dx; I_n - I_{n+1} = Gamma(s)/(n+1)^s;
/// r_0 = 1 - 1/zeta(s). Requires real s > 1.
Family zeta_family(const Number& s);
/// I_n = int_0^inf x^{s-1} e^{-nx}/(e^x/z - 1) dx; I_n - z I_{n+1} = z Gamma(s)/(n+1)^s.
/// Requires s > 1 and 0 < z < 1; z = 1 yields zeta_family(s).
Family polylog_family(const Number& s, const Number& z);
/// I_n = int_0^inf 2x^{2n-1}/((x^2+1)(e^{2 pi x}-1)) dx, n >= 1;
/// I_n + I_{n+1} = (-1)^{n+1} B_{2n}/(2n). The fraction for r_1 diverges to -1.
Family gamma_family();
/// I_n = int_0^inf x^{s+n} e^{-x}/(1+x) dx; I_n + I_{n+1} = Gamma(s+n+1).
Family factorial_family(const Number& s);

/// Builds a family from CLI-style parameters ("k", "s", "z"). Unknown or
/// missing parameters raise Error(parameter).
Family make_family(FamilyKind kind, const std::map<std::string, std::string>& params);

/// The family-specific backward recurrence as written for each family
/// (log, zeta, polylog and gamma displays; factorial uses the direct form
/// r_n = (s+n+1)/(r_{n+1} - (s+n))).
Number family_step(const Family& family, long n, const Number& r_next, int digits = 30);

/// Applies family_step `depth` times from r_{n+depth} = 0.
Number family_unroll(const Family& family, long n, std::size_t depth, int digits = 30);

/// Fraction for the family's headline constant in its classical closed form:
///   log:     log(1+1/k) = k/(k + K_{n>=1} k n^2/(k(n+1) - n))
///   zeta:    zeta(s)    = 1/(1 + K_{n>=1} -n^{2s}/(n^s + (n+1)^s))
///   polylog: Li_s(z)    = 1/(1/z - 1/(z + 2^s + K_{n>=2} -z n^{2s}/(z n^s + (n+1)^s)))
///   gamma:   r_1        = -1/(b_1 - a_1/(b_2 - a_2/(b_3 - ...))),
///            b_n = 1 + (n+1)B_{2n}/(n B_{2n+2}), a_n = b_n - 1
/// Not available for the factorial family.
GeneralizedCF closed_form_cf(const Family& family);

/// Coefficients b_n, a_n of the gamma-family closed form.
Rational gamma_b(long n);
Rational gamma_a(long n);

/// Truncated asymptotic expansion of I_n/C (C constant in n) from the Taylor
/// series of the integrand kernel at the dominant endpoint:
///   I_n ~ C sum_j c_j (alpha)_j / (n + beta)^{alpha + j}.
struct AsymptoticKernel {
  std::vector<Number> coefficients;
  Number alpha;
  long beta = 1;

  Real value(long n, int digits) const;
  /// Estimate of I_{n+1}/I_n.
  Real ratio(long n, int digits) const;
};

/// Kernel expansion used for the tail estimate of the log, zeta and polylog
/// families. Throws Error(parameter) for gamma and factorial, whose fractions
/// diverge.
AsymptoticKernel asymptotic_kernel(const Family& family, std::size_t terms = 14);

}  // namespace eulerfrac
