#pragma once

// Reference values computed without any continued fraction: quadrature of
// the defining integrals and direct series with explicit tail control.

#include "eulerfrac/families.hpp"
#include "eulerfrac/quadrature.hpp"

namespace eulerfrac {

/// I_n for a family.
///   log, factorial: quadrature of the defining integral
///   zeta:           Gamma(s) zeta(s, n+1)
///   polylog:        Gamma(s) sum_{k>=1} z^k/(k+n)^s
///   gamma:          forward recurrence I_{n+1} = mu_n - I_n from
///                   I_1 = gamma - 1/2 (euler_gamma)
Real I_value(const Family& family, long n, int digits);

/// I_n by direct quadrature of the family's integrand (every family).
Real I_quadrature(const Family& family, long n, int digits);

/// Integrand of I_n as a function of x on its domain ((0,1) for log,
/// (0,inf) otherwise).
Integrand family_integrand(const Family& family, long n, int digits);

IOracle oracle_for(const Family& family);
IOracle quadrature_oracle_for(const Family& family);

/// sum_{k>=0} (k+a)^{-s}: direct sum plus an Euler-Maclaurin remainder whose
/// neglected part is below 10^{-digits}. Requires s > 1, a > 0.
Real hurwitz_zeta(const Number& s, const Number& a, int digits);

/// sum_{k>=0} z^k (k+a)^{-s} with a geometric tail bound. Requires 0 < z < 1,
/// s > 1, a > 0.
Real lerch_phi(const Number& z, const Number& s, const Number& a, int digits);

/// Li_s(z) = z Phi(z, s, 1).
Real polylog(const Number& s, const Number& z, int digits);

/// zeta_m(s) = sum_{k=1}^{m} k^{-s}.
Number truncated_zeta(const Number& s, long m, int digits);

/// Li_{s,m}(z) = sum_{j=1}^{m} z^j/j^s.
Number truncated_polylog(const Number& s, const Number& z, long m, int digits);

/// True r_{n0} = I(n0+1)/I(n0) from the oracle.
Real reference_ratio(const Family& family, int digits);

}  // namespace eulerfrac
