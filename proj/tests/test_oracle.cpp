#include "support.hpp"

#include "eulerfrac/error.hpp"
#include "eulerfrac/oracle.hpp"

using namespace eulerfrac;
using testing::gap;
using testing::q;

TEST_CASE("quadrature on elementary integrals") {
  const Real third = integrate_finite([](const Real& x) { return x * x; }, 30);
  CHECK(abs(third - Real(q(1, 3), 30)).to_double() < 1e-29);
  const Real one = integrate_halfline([](const Real& x) { return exp(-x); }, 30);
  CHECK(abs(one - 1).to_double() < 1e-29);
  const Real log2 = integrate_finite([](const Real& x) { return Real(1L, x.digits()) / (x + 1); }, 40);
  CHECK(gap(log2, testing::ref::log2) < 1e-39);
  const Real endpoint = integrate_finite([](const Real& x) { return log(x); }, 25);
  CHECK(abs(endpoint + 1).to_double() < 1e-24);
}

TEST_CASE("quadrature failure carries an estimate") {
  QuadratureOptions opts;
  opts.max_levels = 1;
  try {
    integrate_finite([](const Real& x) { return sqrt(x); }, 30, opts);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK_FALSE(e.estimate().empty());
  }
}

TEST_CASE("series oracles") {
  CHECK(gap(hurwitz_zeta(Number(3), Number(1), 40), testing::ref::zeta3) < 1e-39);
  CHECK(gap(hurwitz_zeta(Number(q(5, 2)), Number(1), 40), testing::ref::zeta2_5) < 1e-39);
  CHECK(gap(hurwitz_zeta(Number(q(5, 2)), Number(q(7, 2)), 40), testing::ref::hurwitz_2_5_at_3_5) < 1e-39);
  CHECK(gap(polylog(Number(2), Number(q(1, 2)), 40), testing::ref::li2_half) < 1e-39);
  CHECK(gap(polylog(Number(3), Number(q(1, 2)), 40), testing::ref::li3_half) < 1e-39);
  CHECK(gap(polylog(Number(q(5, 2)), Number(q(3, 10)), 40), testing::ref::li_5_2_at_3_10) < 1e-39);
  CHECK(gap(lerch_phi(Number(q(1, 2)), Number(2), Number(3), 40), testing::ref::lerch_half_2_3) < 1e-39);
  CHECK_THROWS_AS(hurwitz_zeta(Number(1), Number(1), 20), Error);
  CHECK_THROWS_AS(lerch_phi(Number(1), Number(2), Number(1), 20), Error);
}

TEST_CASE("truncated sums") {
  CHECK(truncated_zeta(Number(2), 3, 30) == Number(q(49, 36)));
  CHECK(truncated_polylog(Number(2), Number(q(1, 2)), 2, 30) == Number(q(9, 16)));
}

TEST_CASE("family integrals") {
  CHECK(gap(I_value(log_family(1), 0, 40), testing::ref::log2) < 1e-39);
  CHECK(gap(I_value(factorial_family(Number(0)), 0, 40), testing::ref::factorial_i0) < 1e-39);
  CHECK(gap(I_value(factorial_family(Number(q(1, 2))), 0, 40), testing::ref::factorial_s_half_i0) < 1e-39);
  const Real gamma_i1 = I_value(gamma_family(), 1, 40);
  CHECK(gap(gamma_i1 + Real(q(1, 2), 45), testing::ref::euler_gamma) < 1e-39);
  CHECK_THROWS_AS(I_value(gamma_family(), 0, 20), Error);
}

TEST_CASE("closed forms agree with direct quadrature") {
  for (const Family& f : {log_family(2), zeta_family(Number(2)), zeta_family(Number(q(7, 2))),
                          polylog_family(Number(2), Number(q(1, 2))), polylog_family(Number(3), Number(q(1, 5))),
                          gamma_family(), factorial_family(Number(0))}) {
    for (long n = f.n0(); n <= f.n0() + 6; n += 3) {
      const Real a = I_value(f, n, 30);
      const Real b = I_quadrature(f, n, 30);
      CHECK(abs(a - b).to_double() <= 1e-27 * std::max(1.0, std::abs(a.to_double())));
    }
  }
}
