#include "eulerfrac/csummation.hpp"

#include "eulerfrac/error.hpp"
#include "eulerfrac/oracle.hpp"

namespace eulerfrac {

namespace {

constexpr int kGuard = 10;

Real tail_entry(const CSumProblem& p, long m1, int wp) {
  // |(k2/k1)^{m1} I(n+m1)|
  const Real kappa = abs(p.rec.kappa().to_real(wp));
  return abs(pow(kappa, m1) * p.I(p.n + m1, wp));
}

/// |t_{k+1}/t_k| for the criterion series.
Real term_ratio(const CSumProblem& p, long k, int wp) {
  const Real t0 = p.series_term(k, wp).to_real(wp);
  const Real t1 = p.series_term(k + 1, wp).to_real(wp);
  if (t0.is_zero() || t1.is_zero())
    throw Error(ErrorKind::precondition, "criterion series has vanishing terms; convergence test not applicable");
  return abs(t1 / t0);
}

/// Ratio test when the term ratio has settled below 1, Raabe when it tends to
/// 1 with k(1/rho - 1) > 1, Leibniz for alternating decreasing terms.
std::string convergence_test(const CSumProblem& p, int wp) {
  constexpr long near = 60;
  constexpr long far = 120;
  const Real rho_near = term_ratio(p, near, wp);
  const Real rho_far = term_ratio(p, far, wp);
  const Real one(1L, wp);
  if (!(rho_far < one))
    throw Error(ErrorKind::precondition, "criterion series diverges (ratio test); regularity does not apply");
  const Real gap_near = one - rho_near;
  const Real gap_far = one - rho_far;
  // A limit L < 1 keeps 1 - rho roughly fixed; rho -> 1 halves it as k doubles.
  if (gap_far > gap_near * Real(0.75, wp)) return "ratio";
  const Real raabe = Real(far, wp) * (one / rho_far - 1);
  if (raabe > Real(1.05, wp)) return "raabe";
  const Real t0 = p.series_term(far, wp).to_real(wp);
  const Real t1 = p.series_term(far + 1, wp).to_real(wp);
  if (t0.sign() != t1.sign()) return "leibniz";
  throw Error(ErrorKind::precondition, "criterion series convergence not established; regularity does not apply");
}

}  // namespace

Number CSumProblem::series_term(long k, int digits) const {
  const Number step = -rec.kappa();
  Number power = 1;
  for (long j = 0; j < k; ++j) power = power * step;
  return power * rec.mu(n + k, digits);
}

CSumProblem make_csum_problem(const Family& family, long n, bool quadrature) {
  if (n < family.n0()) throw Error(ErrorKind::parameter, "n below the family start index");
  return CSumProblem{family.rec, n, quadrature ? quadrature_oracle_for(family) : oracle_for(family),
                     family.name()};
}

Real csum_value(const CSumProblem& problem, int digits) {
  const int wp = digits + kGuard;
  return (problem.rec.k1.to_real(wp) * problem.I(problem.n, wp)).with_digits(digits);
}

GammaPartialSums gamma_divergent_partial_sums(std::size_t count, int digits) {
  if (count < 1) throw Error(ErrorKind::parameter, "need at least one partial sum");
  GammaPartialSums out;
  out.reference = euler_gamma(digits);
  Rational sum(7, 12);
  for (std::size_t k = 1; k <= count; ++k) {
    const Rational term = Rational(bernoulli(static_cast<unsigned>(2 * k + 2)) / Rational(2 * k + 2));
    sum += term;
    out.partial_sums.push_back(sum);
    out.zeta_terms.push_back(Rational(-zeta_neg(static_cast<unsigned>(2 * k + 1))));
  }
  const std::size_t limit = std::min<std::size_t>(count, 10);
  for (std::size_t k = 1; k <= limit; ++k) {
    const Real err = abs(Real(out.partial_sums[k - 1], digits) - out.reference);
    if (out.optimal_k == 0 || err < out.optimal_error) {
      out.optimal_k = k;
      out.optimal_error = err;
    }
  }
  return out;
}

Real gamma_series_consistency(const CSumProblem& gamma_problem, int digits) {
  const Real bracket = csum_value(gamma_problem, digits + kGuard) - Real(Rational(1, 12), digits + kGuard);
  return abs(Real(Rational(7, 12), digits + kGuard) + bracket - euler_gamma(digits + kGuard)).with_digits(digits);
}

AdmissibilityReport admissibility_check(const CSumProblem& problem, std::size_t max_m, int digits) {
  if (max_m < 4) throw Error(ErrorKind::parameter, "admissibility needs M_max >= 4");
  const int wp = digits + kGuard;
  AdmissibilityReport report;
  for (std::size_t m = 0; m <= max_m; ++m) report.tail.push_back(tail_entry(problem, static_cast<long>(m) + 1, wp));

  // Judged on the late half of the table: early entries may move either way.
  bool decreasing = report.tail.back() < report.tail.front();
  bool increasing = true;
  for (std::size_t i = report.tail.size() / 2 + 1; i < report.tail.size(); ++i) {
    if (!(report.tail[i] < report.tail[i - 1])) decreasing = false;
    if (!(report.tail[i] > report.tail[i - 1])) increasing = false;
  }
  if (decreasing) {
    report.verdict = "admissible";
  } else if (increasing) {
    report.verdict = "inconclusive-divergent-case";
    report.note =
        "tail grows; admissibility would need the generating function of mu to be analytic at -k2/k1 "
        "(conjectural criterion, not evaluated)";
  } else {
    report.verdict = "rejected";
    report.note = "tail does not decrease to 0";
  }
  return report;
}

IOracle perturbed_oracle(const CSumProblem& problem, const Rational& c) {
  const Number h = -(problem.rec.k1 / problem.rec.k2);
  const long n0 = problem.rec.n0;
  const IOracle base = problem.I;
  return [base, h, n0, c](long m, int digits) {
    Number hm = 1;
    for (long j = n0; j < m; ++j) hm = hm * h;
    return base(m, digits) + (Number(c) * hm).to_real(digits);
  };
}

AmbiguityReport ambiguity_demo(const CSumProblem& problem, const Rational& c, std::size_t max_m, int digits) {
  if (c == 0) throw Error(ErrorKind::parameter, "perturbation c must be nonzero");
  AmbiguityReport report;
  report.c = c;
  CSumProblem perturbed = problem;
  perturbed.I = perturbed_oracle(problem, c);
  perturbed.label = problem.label + "+homogeneous";
  report.recurrence_residual = Real(0L, digits);
  for (long m = problem.n; m <= problem.n + static_cast<long>(max_m); ++m)
    report.recurrence_residual = max(report.recurrence_residual, residual(problem.rec, perturbed.I, m, digits));
  report.original = admissibility_check(problem, max_m, digits);
  report.perturbed = admissibility_check(perturbed, max_m, digits);
  report.distinguished = report.original.verdict == "admissible" && report.perturbed.verdict != "admissible";
  return report;
}

StabilityReport stability_check(const CSumProblem& problem, int digits) {
  const int wp = digits + kGuard;
  CSumProblem next = problem;
  next.n = problem.n + 1;
  const Real s = csum_value(problem, wp);
  const Real s_next = csum_value(next, wp);
  const Real rhs = problem.rec.mu(problem.n, wp).to_real(wp) - problem.rec.kappa().to_real(wp) * s_next;
  return {s.with_digits(digits), rhs.with_digits(digits), abs(s - rhs).with_digits(digits)};
}

std::pair<Real, Real> levin_u(const std::vector<Real>& terms) {
  if (terms.size() < 3) throw Error(ErrorKind::parameter, "levin_u needs at least three terms");
  const int wp = terms.front().digits();
  std::vector<Real> partial;
  Real s(0L, wp);
  for (const Real& t : terms) {
    s += t;
    partial.push_back(s);
  }
  auto transform = [&](std::size_t k) {
    Real num(0L, wp);
    Real den(0L, wp);
    const Real base = Real(static_cast<long>(k + 1), wp);
    for (std::size_t j = 0; j <= k; ++j) {
      if (terms[j].is_zero()) continue;
      const Real omega = terms[j] * static_cast<long>(j + 1);
      Real c = Real(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)), wp) *
               pow(Real(static_cast<long>(j + 1), wp) / base, static_cast<long>(k) - 1);
      if (j % 2 == 1) c = -c;
      num += c * partial[j] / omega;
      den += c / omega;
    }
    return num / den;
  };
  const std::size_t k = terms.size() - 1;
  const Real last = transform(k);
  const Real prev = transform(k - 1);
  return {last, abs(last - prev)};
}

RegularityReport regularity_check(const CSumProblem& problem, std::size_t terms, const Real& tol, int digits) {
  if (terms < 8) throw Error(ErrorKind::parameter, "regularity check needs at least 8 terms");
  // Levin cancellation costs roughly one digit per term.
  const int wp = digits + kGuard + static_cast<int>(terms);

  RegularityReport report;
  report.test = convergence_test(problem, wp);

  std::vector<Real> series;
  for (long k = 0; k < static_cast<long>(terms); ++k) series.push_back(problem.series_term(k, wp).to_real(wp));
  auto [value, err] = levin_u(series);
  report.csum = csum_value(problem, digits);
  report.classical = value.with_digits(digits);
  report.error_estimate = err.with_digits(digits);
  report.residual = abs(report.csum - value).with_digits(digits);
  report.tolerance = tol;
  report.pass = report.residual <= tol;
  return report;
}

}  // namespace eulerfrac
