#include "support.hpp"

#include "eulerfrac/csummation.hpp"
#include "eulerfrac/error.hpp"
#include "eulerfrac/oracle.hpp"

using namespace eulerfrac;
using testing::q;

TEST_CASE("csum values") {
  const CSumProblem fact = make_csum_problem(factorial_family(Number(0)), 0);
  CHECK(testing::gap(csum_value(fact, 30), testing::ref::factorial_i0) < 1e-29);
  const CSumProblem gamma = make_csum_problem(gamma_family(), 1, true);
  CHECK(testing::gap(csum_value(gamma, 30) + Real(q(1, 2), 40), testing::ref::euler_gamma) < 1e-29);
  const CSumProblem log = make_csum_problem(log_family(1), 0);
  CHECK(testing::gap(csum_value(log, 30), testing::ref::log2) < 1e-29);
}

TEST_CASE("series terms") {
  const CSumProblem fact = make_csum_problem(factorial_family(Number(0)), 0);
  Number sum = 0;
  const std::vector<Number> expected{1, 0, 2, -4, 20};
  for (long k = 0; k < 5; ++k) {
    sum = sum + fact.series_term(k, 30);
    CHECK(sum == expected[static_cast<std::size_t>(k)]);
  }
  const CSumProblem gamma = make_csum_problem(gamma_family(), 1);
  CHECK(gamma.series_term(0, 30) == Number(q(1, 12)));
  CHECK(gamma.series_term(1, 30) == Number(q(-1, 120)));
}

TEST_CASE("gamma partial sums") {
  const GammaPartialSums g = gamma_divergent_partial_sums(10);
  CHECK(g.partial_sums[0] == q(23, 40));
  CHECK(abs(Real(g.partial_sums[1], 20) - Real(0.578968, 20)).to_double() < 1e-6);
  CHECK(abs(Real(g.partial_sums[3], 20) - Real(0.582377, 20)).to_double() < 1e-6);
  for (std::size_t k = 0; k < 10; ++k)
    CHECK(g.zeta_terms[k] == bernoulli(static_cast<unsigned>(2 * k + 4)) / Rational(2 * static_cast<long>(k) + 4));
  CHECK(g.optimal_k <= 6);
  CHECK(g.optimal_error.to_double() < 0.005);
  CHECK(abs(g.partial_sums[9]) > 100);
  CHECK(gamma_series_consistency(make_csum_problem(gamma_family(), 1, true), 20).to_double() < 1e-17);
}

TEST_CASE("admissibility") {
  CHECK(admissibility_check(make_csum_problem(log_family(1), 0), 12, 30).verdict == "admissible");
  const AdmissibilityReport g = admissibility_check(make_csum_problem(gamma_family(), 1), 12, 30);
  CHECK(g.verdict == "inconclusive-divergent-case");
  CHECK_FALSE(g.note.empty());
  CHECK(admissibility_check(make_csum_problem(factorial_family(Number(0)), 0), 12, 30).verdict ==
        "inconclusive-divergent-case");
}

TEST_CASE("ambiguity") {
  const CSumProblem p = make_csum_problem(log_family(1), 0);
  const AmbiguityReport a = ambiguity_demo(p, q(1), 12, 30);
  CHECK(a.recurrence_residual.to_double() < 1e-20);
  CHECK(a.original.verdict == "admissible");
  CHECK(a.perturbed.verdict == "rejected");
  CHECK(a.distinguished);
  CHECK(abs(a.perturbed.tail.back() - 1).to_double() < 0.1);
  CHECK(a.original.tail.back().to_double() < 0.1);
  for (const Rational& c : {q(-1), q(1, 2), q(3)}) CHECK(ambiguity_demo(p, c, 12, 30).distinguished);
  CHECK_THROWS_AS(ambiguity_demo(p, q(0)), Error);

  // J_n = int_0^1 (x^n/(1+x) + (-1)^n) dx is the perturbation with c = 1.
  const IOracle j = perturbed_oracle(p, q(1));
  for (long n = 0; n < 5; ++n) {
    const Real direct =
        integrate_finite([n](const Real& x) { return pow(x, n) / (x + 1) + (n % 2 ? -1 : 1); }, 30);
    CHECK(abs(direct - j(n, 30)).to_double() < 1e-28);
  }
}

TEST_CASE("stability") {
  CHECK(stability_check(make_csum_problem(gamma_family(), 1, true), 30).residual.to_double() < 1e-20);
  CHECK(stability_check(make_csum_problem(factorial_family(Number(0)), 0), 30).residual.to_double() < 1e-15);
  CHECK(stability_check(make_csum_problem(log_family(2), 3), 30).residual.to_double() < 1e-20);
  for (const Family& f : {log_family(1), zeta_family(Number(2)), polylog_family(Number(2), Number(q(1, 2))),
                          gamma_family(), factorial_family(Number(0))})
    for (long n = f.n0(); n <= f.n0() + 4; ++n)
      CHECK(stability_check(make_csum_problem(f, n, true), 20).residual.to_double() < 1e-17);
}

TEST_CASE("regularity") {
  const Real tol(1e-10, 30);
  const RegularityReport log = regularity_check(make_csum_problem(log_family(1), 0), 40, tol, 30);
  CHECK(log.pass);
  CHECK(log.test == "leibniz");
  const RegularityReport zeta = regularity_check(make_csum_problem(zeta_family(Number(2)), 0), 40, tol, 30);
  CHECK(zeta.pass);
  CHECK(zeta.test == "raabe");
  const RegularityReport poly =
      regularity_check(make_csum_problem(polylog_family(Number(2), Number(q(1, 2))), 0), 40, tol, 30);
  CHECK(poly.pass);
  CHECK(poly.test == "ratio");
  for (const Family& f : {gamma_family(), factorial_family(Number(0))}) {
    try {
      regularity_check(make_csum_problem(f, f.n0()), 40, tol, 30);
      FAIL("expected a precondition error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::precondition);
    }
  }
}

TEST_CASE("levin transform") {
  std::vector<Real> terms;
  for (long k = 0; k < 30; ++k) terms.push_back(Real(k % 2 ? -1L : 1L, 60) / (k + 1));
  const auto [value, err] = levin_u(terms);
  CHECK(testing::gap(value, testing::ref::log2) < 1e-25);
  CHECK(err.to_double() < 1e-20);
}
