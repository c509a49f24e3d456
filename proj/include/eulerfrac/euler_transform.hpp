#pragma once

// Euler's continued fraction theorem, both directions:
//
//   1 + sum_{j>=1} prod_{i<=j} a_i = 1/(1 - a_1/(1 + a_1 - a_2/(1 + a_2 - ...)))

#include "eulerfrac/cf_core.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace eulerfrac {

struct IntegralRecurrence;

/// 1-indexed term sequence i -> a_i. Must be deterministic.
using TermSequence = std::function<Number(std::size_t i, int digits)>;

TermSequence sequence_from(std::vector<Number> terms);

/// Fraction with lead 0, partial numerators (1, -a_1, -a_2, ...) and partial
/// denominators (1, 1 + a_1, 1 + a_2, ...). Its N-th convergent equals
/// partial_sum(a, N).
GeneralizedCF series_to_cf(TermSequence a);

/// 1 + sum_{j=1}^{N} prod_{i=1}^{j} a_i.
Number partial_sum(const TermSequence& a, std::size_t n, int digits = 30);

/// The K terms (-1)^k (k2/k1)^k mu_{n+k}/mu_n, k = 1..K, of the series whose
/// convergence decides convergence of the ratio fraction.
std::vector<Number> recurrence_series_terms(const IntegralRecurrence& rec, long n, std::size_t count, int digits = 30);

/// Ratio-sequence view of the same series: a_i = -(k2/k1) mu_{n+i}/mu_{n+i-1}.
TermSequence recurrence_ratio_sequence(const IntegralRecurrence& rec, long n);

}  // namespace eulerfrac
