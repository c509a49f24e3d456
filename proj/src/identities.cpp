#include "eulerfrac/identities.hpp"

#include "eulerfrac/error.hpp"
#include "eulerfrac/families.hpp"
#include "eulerfrac/oracle.hpp"
#include "eulerfrac/recurrence.hpp"

namespace eulerfrac {

namespace {

constexpr int kGuard = 10;

/// Fraction evaluations r_0..r_n, accurate well below the identity tolerance.
std::vector<Real> ratios(const Family& family, long n, int digits) {
  const int wp = digits + kGuard;
  const Real tol = pow(Real(10L, wp), -(digits + 3));
  std::vector<Real> out;
  for (long j = family.n0(); j <= n; ++j) out.push_back(ratio_value(family.rec, j, tol, {wp}));
  return out;
}

Real product(const std::vector<Real>& xs, int wp) {
  Real p(1L, wp);
  for (const Real& x : xs) p *= x;
  return p;
}

/// sum_{j=from}^{to} x^j
Real geometric_sum(const Real& x, long from, long to) {
  Real sum(0L, x.digits());
  Real xj = pow(x, from);
  for (long j = from; j <= to; ++j) {
    sum += xj;
    xj *= x;
  }
  return sum;
}

Real neg_power(long base, const Number& s, int wp) {
  if (s.is_exact() && s.exact().get_den() == 1) return pow(Real(base, wp), -s.exact().get_num().get_si());
  return pow(Real(base, wp), -s.to_real(wp));
}

IdentityReport make_report(std::string name, std::map<std::string, std::string> params, const Real& lhs,
                           const Real& rhs, const Real& residual, const Real& tol, int digits) {
  IdentityReport report{std::move(name), std::move(params), lhs.with_digits(digits), rhs.with_digits(digits),
                        residual.with_digits(digits), tol, false};
  report.pass = report.residual <= tol;
  return report;
}

std::string str(long v) { return std::to_string(v); }

void require_unroll(long n, long k) {
  if (n < 0) throw Error(ErrorKind::parameter, "n must be >= 0");
  if (k < 1) throw Error(ErrorKind::parameter, "k must be >= 1");
}

struct Unroll {
  Real lhs;
  Real rhs;
};

Unroll geometric(const Number& s, long n, long k, int digits, bool literal) {
  require_unroll(n, k);
  const int wp = digits + kGuard;
  const Family family = zeta_family(s);
  const Real r = ratios(family, n, digits).back();
  const Real x = hurwitz_zeta(s, Number(n + 1), wp);
  const Real sum = literal ? geometric_sum(r, 1, k) : geometric_sum(r, 0, k - 1);
  return {x, pow(r, k) * x + neg_power(n + 1, s, wp) * sum};
}

Unroll polylog_product(const Number& s, const Number& z, long n, int digits, bool literal) {
  if (n < 0) throw Error(ErrorKind::parameter, "n must be >= 0");
  const int wp = digits + kGuard;
  const Family family = polylog_family(s, z);
  const Real prod = product(ratios(family, n, digits), wp);
  const Real li = polylog(s, z, wp);
  const Real head = truncated_polylog(s, z, n + 1, wp).to_real(wp);
  const Real zr = z.to_real(wp);
  const Real scale = pow(zr, literal ? -n : -(n + 1));
  return {prod, scale * (li - head) / li};
}

Unroll lerch(const Number& s, const Number& z, long n, long k, int digits, bool literal) {
  require_unroll(n, k);
  const int wp = digits + kGuard;
  const Family family = polylog_family(s, z);
  const Real r = ratios(family, n, digits).back();
  const Real zr = z.to_real(wp);
  const Real phi = lerch_phi(z, s, Number(n + 1), wp);
  const Real zr_r = zr * r;
  Real rhs = pow(zr_r, k) * phi;
  if (literal)
    rhs += pow(zr, n) * neg_power(n + 1, s, wp) * geometric_sum(r, 1, k);
  else
    rhs += neg_power(n + 1, s, wp) * geometric_sum(zr_r, 0, k - 1);
  return {phi, rhs};
}

std::map<std::string, std::string> sz_params(const Number& s, const Number& z, long n) {
  return {{"s", s.to_string()}, {"z", z.to_string()}, {"n", str(n)}};
}

}  // namespace

IdentityReport verify_log_product(long k, long n, const Real& tol, int digits) {
  if (k < 1) throw Error(ErrorKind::parameter, "k must be >= 1");
  if (n < 0) throw Error(ErrorKind::parameter, "n must be >= 0");
  const int wp = digits + kGuard;
  const Family family = log_family(k);
  const Real lhs = I_quadrature(family, n + 1, wp);
  const Real rhs = log1p(Real(Rational(1, k), wp)) * product(ratios(family, n, digits), wp);
  return make_report("log_product", {{"k", str(k)}, {"n", str(n)}}, lhs, rhs, abs(lhs - rhs), tol, digits);
}

IdentityReport verify_zeta_truncation(const Number& s, long n, const Real& tol, int digits) {
  if (n < 0) throw Error(ErrorKind::parameter, "n must be >= 0");
  const int wp = digits + kGuard;
  const Family family = zeta_family(s);
  const Real prod = product(ratios(family, n, digits), wp);
  const Real zeta = hurwitz_zeta(s, Number(1), wp);
  const Real lhs = truncated_zeta(s, n + 1, wp).to_real(wp) / zeta;
  const Real rhs = Real(1L, wp) - prod;
  const Real corollary = abs(hurwitz_zeta(s, Number(n + 2), wp) - zeta * prod);
  return make_report("zeta_truncation", {{"s", s.to_string()}, {"n", str(n)}}, lhs, rhs,
                     max(abs(lhs - rhs), corollary), tol, digits);
}

IdentityReport verify_geometric_unroll(const Number& s, long n, long k, const Real& tol, int digits) {
  const Unroll u = geometric(s, n, k, digits, false);
  return make_report("geometric_unroll-corrected", {{"s", s.to_string()}, {"n", str(n)}, {"k", str(k)}}, u.lhs,
                     u.rhs, abs(u.lhs - u.rhs), tol, digits);
}

IdentityReport verify_geometric_unroll_literal(const Number& s, long n, long k, const Real& tol, int digits) {
  const Unroll u = geometric(s, n, k, digits, true);
  return make_report("geometric_unroll-literal", {{"s", s.to_string()}, {"n", str(n)}, {"k", str(k)}}, u.lhs,
                     u.rhs, abs(u.lhs - u.rhs), tol, digits);
}

IdentityReport verify_polylog_product(const Number& s, const Number& z, long n, const Real& tol, int digits) {
  const Unroll u = polylog_product(s, z, n, digits, false);
  return make_report("polylog_product-corrected", sz_params(s, z, n), u.lhs, u.rhs, abs(u.lhs - u.rhs), tol,
                     digits);
}

IdentityReport verify_polylog_product_literal(const Number& s, const Number& z, long n, const Real& tol,
                                              int digits) {
  const Unroll u = polylog_product(s, z, n, digits, true);
  return make_report("polylog_product-literal", sz_params(s, z, n), u.lhs, u.rhs, abs(u.lhs - u.rhs), tol,
                     digits);
}

IdentityReport verify_lerch_unroll(const Number& s, const Number& z, long n, long k, const Real& tol, int digits) {
  const Unroll u = lerch(s, z, n, k, digits, false);
  auto params = sz_params(s, z, n);
  params["k"] = str(k);
  return make_report("lerch_unroll-corrected", params, u.lhs, u.rhs, abs(u.lhs - u.rhs), tol, digits);
}

IdentityReport verify_lerch_unroll_literal(const Number& s, const Number& z, long n, long k, const Real& tol,
                                           int digits) {
  const Unroll u = lerch(s, z, n, k, digits, true);
  auto params = sz_params(s, z, n);
  params["k"] = str(k);
  return make_report("lerch_unroll-literal", params, u.lhs, u.rhs, abs(u.lhs - u.rhs), tol, digits);
}

std::vector<IdentityReport> verify_identity_grid(const Real& tol, int digits, const IdentityGrid& grid) {
  std::vector<IdentityReport> out;
  const Number z(grid.z);
  for (long k = 1; k <= grid.max_k; ++k)
    for (long n = 0; n <= grid.max_n; ++n) out.push_back(verify_log_product(k, n, tol, digits));
  for (long sv : grid.s) {
    const Number s(sv);
    for (long n = 0; n <= grid.max_n; ++n) {
      out.push_back(verify_zeta_truncation(s, n, tol, digits));
      out.push_back(verify_polylog_product(s, z, n, tol, digits));
      for (long k = 1; k <= grid.max_k; ++k) {
        out.push_back(verify_geometric_unroll(s, n, k, tol, digits));
        out.push_back(verify_lerch_unroll(s, z, n, k, tol, digits));
      }
    }
  }
  return out;
}

std::vector<IdentityReport> literal_sanity_reports(const Real& tol, int digits) {
  const Number half(Rational(1, 2));
  return {
      verify_geometric_unroll_literal(Number(2), 0, 1, tol, digits),
      verify_polylog_product_literal(Number(2), half, 0, tol, digits),
      verify_lerch_unroll_literal(Number(2), half, 0, 1, tol, digits),
  };
}

}  // namespace eulerfrac
