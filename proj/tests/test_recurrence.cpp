#include "support.hpp"

#include "eulerfrac/error.hpp"
#include "eulerfrac/families.hpp"
#include "eulerfrac/oracle.hpp"
#include "eulerfrac/recurrence.hpp"

using namespace eulerfrac;
using testing::q;

TEST_CASE("shallow ratio fractions") {
  // Depth d = d backward steps from r_{n+d} = 0.
  CHECK(*convergent(build_ratio_cf(log_family(1).rec, 0).cf.without_tail(), 0) == Number(1));
  CHECK(*convergent(build_ratio_cf(zeta_family(Number(2)).rec, 0).cf.without_tail(), 0) == Number(q(1, 5)));
  CHECK(*convergent(build_ratio_cf(gamma_family().rec, 1).cf, 0) == Number(q(1, 9)));
  CHECK(backward_unroll(log_family(1).rec, 0, 1) == Number(1));
  CHECK(backward_unroll(zeta_family(Number(2)).rec, 0, 1) == Number(q(1, 5)));
}

TEST_CASE("backward unrolling reproduces convergents") {
  for (const Family& f : {log_family(2), zeta_family(Number(3)), polylog_family(Number(2), Number(q(1, 3))),
                          gamma_family(), factorial_family(Number(1))}) {
    const GeneralizedCF cf = build_ratio_cf(f.rec, f.n0()).cf.without_tail();
    for (std::size_t d = 1; d <= 15; ++d) {
      const auto c = convergent(cf, d - 1);
      if (!c) continue;
      Number unrolled;
      try {
        unrolled = backward_unroll(f.rec, f.n0(), d);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::undefined_approximant);
        continue;
      }
      CHECK(unrolled == *c);
    }
  }
}

TEST_CASE("fixed point absorbs") {
  for (const Family& f : {log_family(1), log_family(3), zeta_family(Number(2)), gamma_family(),
                          factorial_family(Number(0))}) {
    const Number fp = fixed_point(f.rec);
    CHECK(fp == -(f.rec.k1 / f.rec.k2));
    const GeneralizedCF cf = build_ratio_cf(f.rec, f.n0()).cf;
    for (std::size_t m : {0ul, 3ul, 12ul}) CHECK(evaluate_with_tail(cf, m, fp) == fp);
    CHECK(backward_step(f.rec, f.n0(), fp) == fp);
  }
  CHECK(fixed_point(polylog_family(Number(2), Number(q(1, 2))).rec) == Number(2));
}

TEST_CASE("recurrence residuals against the oracle") {
  for (const Family& f : {log_family(1), zeta_family(Number(2)), polylog_family(Number(2), Number(q(1, 2))),
                          gamma_family(), factorial_family(Number(0))}) {
    const IOracle oracle = oracle_for(f);
    for (long n = f.n0(); n <= 10; ++n) CHECK(residual(f.rec, oracle, n, 30).to_double() < 1e-20);
  }
}

TEST_CASE("telescoped product") {
  const Family f = zeta_family(Number(2));
  const Real tol(1e-25, 40);
  CHECK(telescoped_product(f.rec, -1, tol, {40}) == Real(1L, 40));
  const Real p = telescoped_product(f.rec, 2, tol, {40});
  CHECK(testing::gap(p, testing::ref::one_minus_49_6pi2) < 1e-20);
  CHECK_THROWS_AS(telescoped_product(f.rec, -2, tol), Error);
}

TEST_CASE("ratio values") {
  CHECK(testing::gap(ratio_value(log_family(1).rec, 0, Real(1e-25, 40), {40}), testing::ref::log_r0) < 1e-24);
  CHECK(testing::gap(ratio_value(zeta_family(Number(3)).rec, 0, Real(1e-25, 40), {40}), testing::ref::zeta3_r0) <
        1e-24);
  CHECK_THROWS_AS(ratio_value(gamma_family().rec, 1, Real(1e-10, 30)), DivergenceError);
  try {
    ratio_value(factorial_family(Number(0)).rec, 0, Real(1e-10, 30));
  } catch (const DivergenceError& e) {
    CHECK(e.index() == 0);
  }
}

TEST_CASE("construction rejects degenerate recurrences") {
  IntegralRecurrence rec = log_family(1).rec;
  rec.mu = [](long n, int) { return n == 2 ? Number(0) : Number(q(1, n + 1)); };
  rec.mu_ratio = nullptr;
  CHECK_THROWS_AS(build_ratio_cf(rec, 1), Error);
  CHECK_THROWS_AS(build_ratio_cf(rec, 2), Error);
  CHECK_NOTHROW(build_ratio_cf(rec, 3));
  IntegralRecurrence bad = log_family(1).rec;
  bad.k2 = Number(0);
  CHECK_THROWS_AS(build_ratio_cf(bad, 0), Error);
  CHECK_THROWS_AS(build_ratio_cf(gamma_family().rec, 0), Error);
}
