#include "eulerfrac/recurrence.hpp"

#include "eulerfrac/error.hpp"

#include <string>

namespace eulerfrac {

Number IntegralRecurrence::kappa() const { return k2 / k1; }

Number IntegralRecurrence::ratio(long n, int digits) const {
  if (mu_ratio) return mu_ratio(n, digits);
  const Number den = mu(n, digits);
  if (den.is_zero()) throw Error(ErrorKind::parameter, "mu vanishes at n = " + std::to_string(n));
  return mu(n + 1, digits) / den;
}

void IntegralRecurrence::validate() const {
  if (k1.is_zero() || k2.is_zero()) throw Error(ErrorKind::parameter, "recurrence needs k1 != 0 and k2 != 0");
  if (!mu) throw Error(ErrorKind::parameter, "recurrence needs a mu sequence");
}

RatioFraction build_ratio_cf(const IntegralRecurrence& rec, long n) {
  rec.validate();
  if (n < rec.n0)
    throw Error(ErrorKind::parameter, "ratio index " + std::to_string(n) + " below start index " + std::to_string(rec.n0));
  for (long m : {n, n + 1}) {
    if (rec.mu(m, 30).is_zero()) throw Error(ErrorKind::parameter, "mu vanishes at n = " + std::to_string(m));
  }

  const Number inv_kappa = rec.k1 / rec.k2;
  GeneralizedCF::Options opts;
  opts.fixed_point = fixed_point(rec);
  opts.name = "r_" + std::to_string(n);
  if (rec.ratio_estimate) {
    opts.tail = [est = rec.ratio_estimate, n](std::size_t level, int digits) {
      return est(n + static_cast<long>(level), digits);
    };
  }
  auto terms = [rec, n, inv_kappa](std::size_t m, int digits) -> Term {
    const long idx = n + static_cast<long>(m);
    if (rec.mu(idx + 1, digits).is_zero())
      throw Error(ErrorKind::parameter, "mu vanishes at n = " + std::to_string(idx + 1));
    const Number rho = rec.ratio(idx, digits);
    return Term{inv_kappa * rho, inv_kappa - rho};
  };
  return RatioFraction{rec, n, GeneralizedCF(Number(0), std::move(terms), std::move(opts))};
}

Number backward_step(const IntegralRecurrence& rec, long n, const Number& r_next, int digits) {
  const Number mu_n = rec.mu(n, digits);
  const Number mu_n1 = rec.mu(n + 1, digits);
  const Number den = rec.k1 * mu_n - rec.k2 * mu_n1 + rec.k2 * mu_n * r_next;
  if (den.is_zero()) throw Error(ErrorKind::undefined_approximant, "zero denominator at n = " + std::to_string(n));
  return rec.k1 * mu_n1 / den;
}

Number backward_unroll(const IntegralRecurrence& rec, long n, std::size_t depth, int digits) {
  Number r = 0;
  for (std::size_t i = depth; i-- > 0;) r = backward_step(rec, n + static_cast<long>(i), r, digits);
  return r;
}

Number fixed_point(const IntegralRecurrence& rec) { return -(rec.k1 / rec.k2); }

Real residual(const IntegralRecurrence& rec, const IOracle& oracle, long n, int digits) {
  const Real lhs = rec.k1.to_real(digits) * oracle(n, digits) + rec.k2.to_real(digits) * oracle(n + 1, digits);
  return abs(lhs - rec.mu(n, digits).to_real(digits));
}

Real ratio_value(const IntegralRecurrence& rec, long k, const Real& tol, ProductOptions options) {
  const RatioFraction rf = build_ratio_cf(rec, k);
  EvalOptions eval;
  eval.digits = options.digits;
  const EvalReport report = evaluate(rf.cf, tol, options.max_terms, eval);
  if (report.status != EvalStatus::converged) {
    throw DivergenceError(k, "fraction for r_" + std::to_string(k) + " did not converge (" +
                                 to_string(report.status) + ", value " + report.value.to_string(12) + ")");
  }
  return report.value;
}

Real telescoped_product(const IntegralRecurrence& rec, long n, const Real& tol, ProductOptions options) {
  if (n < rec.n0 - 1)
    throw Error(ErrorKind::parameter, "product end " + std::to_string(n) + " below start index " + std::to_string(rec.n0));
  Real product(1L, options.digits);
  for (long k = rec.n0; k <= n; ++k) product *= ratio_value(rec, k, tol, options);
  return product;
}

}  // namespace eulerfrac
