#pragma once

// Numerical checks of the telescoping identities. In every report one side
// comes from continued fraction evaluations of r_j and the other from the
// oracle (quadrature or direct series); the two share only numerics.

#include "eulerfrac/numerics.hpp"

#include <map>
#include <string>
#include <vector>

namespace eulerfrac {

struct IdentityReport {
  std::string name;
  std::map<std::string, std::string> parameters;
  Real lhs;
  Real rhs;
  Real residual;
  Real tolerance;
  bool pass = false;
};

/// int_0^1 x^{n+1}/(k+x) dx  vs  log(1+1/k) prod_{j=0}^{n} r_j.
IdentityReport verify_log_product(long k, long n, const Real& tol, int digits = 30);

/// zeta_{n+1}(s)/zeta(s)  vs  1 - prod_{j=0}^{n} r_j, together with
/// zeta(s, n+2) = zeta(s) prod_{j=0}^{n} r_j. The residual is the larger of
/// the two.
IdentityReport verify_zeta_truncation(const Number& s, long n, const Real& tol, int digits = 30);

/// x = r_n^k x + (n+1)^{-s} sum_{j=0}^{k-1} r_n^j with x = zeta(s, n+1).
IdentityReport verify_geometric_unroll(const Number& s, long n, long k, const Real& tol, int digits = 30);

/// prod_{j=0}^{n} r_j  vs  z^{-(n+1)} (Li_s(z) - Li_{s,n+1}(z)) / Li_s(z).
IdentityReport verify_polylog_product(const Number& s, const Number& z, long n, const Real& tol, int digits = 30);

/// Phi(z,s,n+1) = (z r_n)^k Phi(z,s,n+1) + (n+1)^{-s} sum_{j=0}^{k-1} (z r_n)^j.
IdentityReport verify_lerch_unroll(const Number& s, const Number& z, long n, long k, const Real& tol,
                                   int digits = 30);

/// Uncorrected variants of the same three identities, kept as negative
/// controls:
///   sum_{j=1}^{k} r_n^j in the geometric unroll,
///   z^{-n} in the polylog product,
///   z^n (n+1)^{-s} sum_{j=1}^{k} r_n^j in the Lerch unroll.
IdentityReport verify_geometric_unroll_literal(const Number& s, long n, long k, const Real& tol, int digits = 30);
IdentityReport verify_polylog_product_literal(const Number& s, const Number& z, long n, const Real& tol,
                                              int digits = 30);
IdentityReport verify_lerch_unroll_literal(const Number& s, const Number& z, long n, long k, const Real& tol,
                                           int digits = 30);

struct IdentityGrid {
  std::vector<long> s{2, 3};
  Rational z{1, 2};
  long max_n = 5;
  long max_k = 8;
};

/// Every verify_* over the grid (log product uses k as its family parameter).
/// Deterministic order.
std::vector<IdentityReport> verify_identity_grid(const Real& tol, int digits, const IdentityGrid& grid = {});

/// Literal forms at their k = 1 / n = 0 sanity cases.
std::vector<IdentityReport> literal_sanity_reports(const Real& tol, int digits);

}  // namespace eulerfrac
