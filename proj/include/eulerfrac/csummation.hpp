#pragma once

// C-Summation: the value k1 I_n assigned to the (possibly divergent) series
//
//   sum_{k>=0} (-k2/k1)^k mu_{n+k}
//
// whenever I is an admissible solution of k1 I_n + k2 I_{n+1} = mu_n.

#include "eulerfrac/families.hpp"
#include "eulerfrac/recurrence.hpp"

#include <string>
#include <vector>

namespace eulerfrac {

struct CSumProblem {
  IntegralRecurrence rec;
  long n = 0;
  IOracle I;
  std::string label;

  /// (-k2/k1)^k mu_{n+k}.
  Number series_term(long k, int digits) const;
};

/// Problem for a family at index n, with I taken from I_value or, when
/// `quadrature` is set, from I_quadrature.
CSumProblem make_csum_problem(const Family& family, long n, bool quadrature = false);

/// k1 I(n).
Real csum_value(const CSumProblem& problem, int digits);

struct GammaPartialSums {
  /// S_K = 7/12 + (1/2) sum_{k=1}^{K} B_{2k+2}/(k+1), K = 1..count.
  std::vector<Rational> partial_sums;
  /// The same terms written as -zeta(-2k-1).
  std::vector<Rational> zeta_terms;
  Real reference;
  /// argmin_K |S_K - gamma| over K <= min(count, 10), with the error there.
  std::size_t optimal_k = 0;
  Real optimal_error;
};

GammaPartialSums gamma_divergent_partial_sums(std::size_t count, int digits = 30);

/// |7/12 + (C-sum of sum_{k>=1} B_{2k+2}/(2k+2)) - gamma|, the bracket taken
/// as csum_value(gamma, 1) - 1/12.
Real gamma_series_consistency(const CSumProblem& gamma_problem, int digits);

struct AdmissibilityReport {
  /// |(k2/k1)^{M+1} I(n+M+1)|, M = 0..M_max.
  std::vector<Real> tail;
  /// "admissible", "inconclusive-divergent-case" or "rejected".
  std::string verdict;
  std::string note;
};

AdmissibilityReport admissibility_check(const CSumProblem& problem, std::size_t max_m, int digits);

struct AmbiguityReport {
  Rational c;
  /// max |k1 J(m) + k2 J(m+1) - mu_m| over the checked range.
  Real recurrence_residual;
  AdmissibilityReport original;
  AdmissibilityReport perturbed;
  /// Original accepted and perturbed not.
  bool distinguished = false;
};

/// J(m) = I(m) + c (-k1/k2)^{m-n0}.
IOracle perturbed_oracle(const CSumProblem& problem, const Rational& c);

AmbiguityReport ambiguity_demo(const CSumProblem& problem, const Rational& c, std::size_t max_m = 12,
                               int digits = 30);

struct StabilityReport {
  Real lhs;  // csum at n
  Real rhs;  // mu_n - (k2/k1) csum at n+1
  Real residual;
};

StabilityReport stability_check(const CSumProblem& problem, int digits);

struct RegularityReport {
  /// Convergence test that admitted the series: "ratio", "raabe" or "leibniz".
  std::string test;
  Real csum;
  /// Accelerated classical sum (Levin u-transform of the partial sums).
  Real classical;
  Real error_estimate;
  Real residual;
  Real tolerance;
  bool pass = false;
};

/// Requires the criterion series to pass a convergence test, else
/// Error(precondition). Uses `terms` series terms for the classical sum.
RegularityReport regularity_check(const CSumProblem& problem, std::size_t terms, const Real& tol, int digits);

/// Levin u-transform of s_j = sum_{i<=j} a_i using a_0..a_{K}.
/// Returns the estimate and |L_K - L_{K-1}|.
std::pair<Real, Real> levin_u(const std::vector<Real>& terms);

}  // namespace eulerfrac
