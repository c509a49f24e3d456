#include "support.hpp"

#include "eulerfrac/euler_transform.hpp"
#include "eulerfrac/families.hpp"

#include <random>

using namespace eulerfrac;
using testing::q;

TEST_CASE("convergents equal partial sums exactly") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 9);
  std::uniform_int_distribution<std::size_t> len(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Number> terms;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) terms.push_back(Number(q(num(rng), den(rng))));
    const TermSequence a = sequence_from(terms);
    const GeneralizedCF cf = series_to_cf(a);
    const auto cs = convergents(cf, n);
    for (std::size_t k = 0; k <= n; ++k) {
      const Number s = partial_sum(a, k);
      REQUIRE(cs[k].has_value());
      CHECK(*cs[k] == s);
    }
  }
}

TEST_CASE("zero ratio terms") {
  const TermSequence zeros = sequence_from({Number(0), Number(0), Number(0)});
  const GeneralizedCF cf = series_to_cf(zeros);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(*convergent(cf, n) == Number(1));
}

TEST_CASE("geometric series") {
  const TermSequence half = [](std::size_t, int) { return Number(q(1, 2)); };
  const GeneralizedCF cf = series_to_cf(half);
  CHECK(*convergent(cf, 3) == Number(q(15, 8)));
  CHECK(partial_sum(half, 3) == Number(q(15, 8)));
}

TEST_CASE("criterion series of the log recurrence") {
  const Family f = log_family(1);
  const auto terms = recurrence_series_terms(f.rec, 0, 4);
  CHECK(terms[0] == Number(q(-1, 2)));
  CHECK(terms[1] == Number(q(1, 3)));
  CHECK(terms[3] == Number(q(1, 5)));
  const TermSequence r = recurrence_ratio_sequence(f.rec, 0);
  CHECK(r(1, 30) == Number(q(-1, 2)));
  CHECK(r(2, 30) == Number(q(-2, 3)));
  CHECK(partial_sum(r, 3) == Number(q(7, 12)));
}
