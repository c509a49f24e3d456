#pragma once

// From an integral recurrence k1 I_n + k2 I_{n+1} = mu_n to the continued
// fraction for the ratio r_n = I_{n+1}/I_n.
//
// Rearranging the recurrence at n and n+1 gives the backward map
//
//   r_n = k1 mu_{n+1} / (k1 mu_n - k2 mu_{n+1} + k2 mu_n r_{n+1}),
//
// which has -k1/k2 as a fixed point. The fraction built here is the
// equivalent form r_n = a/(b + r_{n+1}) with a = (k1/k2) rho_n and
// b = k1/k2 - rho_n, rho_n = mu_{n+1}/mu_n, so that the value sitting at
// level m of the fraction is exactly r_{n+m}.

#include "eulerfrac/cf_core.hpp"

#include <functional>

namespace eulerfrac {

using MuFn = std::function<Number(long n, int digits)>;
/// Estimate of r_n = I_{n+1}/I_n valid for large n (asymptotic tail).
using RatioEstimateFn = std::function<Real(long n, int digits)>;
/// Reference values I(n), independent of any continued fraction.
using IOracle = std::function<Real(long n, int digits)>;

struct IntegralRecurrence {
  Number k1;
  Number k2;
  MuFn mu;
  /// Optional mu_{n+1}/mu_n. Families supply it so that common factors such
  /// as Gamma(s) cancel symbolically instead of numerically.
  MuFn mu_ratio;
  long n0 = 0;
  RatioEstimateFn ratio_estimate;

  /// k2/k1.
  Number kappa() const;
  Number ratio(long n, int digits) const;
  /// Throws Error(parameter) if k1 or k2 is zero.
  void validate() const;
};

struct RatioFraction {
  IntegralRecurrence rec;
  long n = 0;
  GeneralizedCF cf;
};

/// Throws Error(parameter) when n < n0 or mu vanishes at n or n+1; later zero
/// mu values surface as Error(parameter) when the offending term is generated.
RatioFraction build_ratio_cf(const IntegralRecurrence& rec, long n);

/// One literal application of the backward map at index n.
Number backward_step(const IntegralRecurrence& rec, long n, const Number& r_next, int digits = 30);

/// Seeds r_{n+depth} = 0 and applies backward_step `depth` times.
Number backward_unroll(const IntegralRecurrence& rec, long n, std::size_t depth, int digits = 30);

/// -k1/k2.
Number fixed_point(const IntegralRecurrence& rec);

/// |k1 I(n) + k2 I(n+1) - mu_n|.
Real residual(const IntegralRecurrence& rec, const IOracle& oracle, long n, int digits);

struct ProductOptions {
  int digits = 30;
  std::size_t max_terms = 100000;
};

/// prod_{k=n0}^{n} r_k with every factor taken from an evaluation of
/// build_ratio_cf(rec, k). Empty product (n = n0 - 1) is 1. Throws
/// DivergenceError carrying the index when a factor does not converge.
Real telescoped_product(const IntegralRecurrence& rec, long n, const Real& tol, ProductOptions options = {});

/// Single factor r_k from its fraction, with the same error contract.
Real ratio_value(const IntegralRecurrence& rec, long k, const Real& tol, ProductOptions options = {});

}  // namespace eulerfrac
