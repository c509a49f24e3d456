#include "eulerfrac/euler_transform.hpp"

#include "eulerfrac/error.hpp"
#include "eulerfrac/recurrence.hpp"

#include <string>

namespace eulerfrac {

TermSequence sequence_from(std::vector<Number> terms) {
  return [list = std::move(terms)](std::size_t i, int) -> Number {
    if (i == 0 || i > list.size())
      throw Error(ErrorKind::parameter, "sequence index " + std::to_string(i) + " out of range");
    return list[i - 1];
  };
}

GeneralizedCF series_to_cf(TermSequence a) {
  GeneralizedCF::Options opts;
  opts.allow_zero_numerator = true;
  opts.name = "euler";
  auto terms = [a = std::move(a)](std::size_t n, int digits) -> Term {
    if (n == 0) return Term{Number(1), Number(1)};
    const Number an = a(n, digits);
    return Term{-an, Number(1) + an};
  };
  return GeneralizedCF(Number(0), std::move(terms), std::move(opts));
}

Number partial_sum(const TermSequence& a, std::size_t n, int digits) {
  Number sum = 1;
  Number product = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    product = product * a(j, digits);
    sum = sum + product;
  }
  return sum;
}

std::vector<Number> recurrence_series_terms(const IntegralRecurrence& rec, long n, std::size_t count, int digits) {
  if (count < 1) throw Error(ErrorKind::parameter, "need at least one series term");
  rec.validate();
  const Number mu_n = rec.mu(n, digits);
  if (mu_n.is_zero()) throw Error(ErrorKind::undefined_approximant, "mu vanishes at n = " + std::to_string(n));
  const Number step = -rec.kappa();
  std::vector<Number> out;
  out.reserve(count);
  Number power = 1;
  for (std::size_t k = 1; k <= count; ++k) {
    power = power * step;
    out.push_back(power * rec.mu(n + static_cast<long>(k), digits) / mu_n);
  }
  return out;
}

TermSequence recurrence_ratio_sequence(const IntegralRecurrence& rec, long n) {
  rec.validate();
  return [rec, n](std::size_t i, int digits) -> Number {
    return -rec.kappa() * rec.ratio(n + static_cast<long>(i) - 1, digits);
  };
}

}  // namespace eulerfrac
