#pragma once

// Generalized continued fractions
//
//     lead + a_0/(b_0 + a_1/(b_1 + a_2/(b_2 + ...)))
//
// with terms indexed from 0. The N-th convergent uses terms 0..N, so
// convergent 0 is lead + a_0/b_0.

#include "eulerfrac/numerics.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace eulerfrac {

struct Term {
  Number a;  // partial numerator
  Number b;  // partial denominator
};

/// Term generator. `digits` is the precision to use for any Real-valued term.
using TermFn = std::function<Term(std::size_t n, int digits)>;

/// Estimate of the tail value sitting at a given level, used to seed a
/// tail-modified approximant in place of 0.
using TailFn = std::function<Real(std::size_t level, int digits)>;

class GeneralizedCF {
 public:
  struct Options {
    /// A zero partial numerator terminates the fraction. Fractions built from
    /// Euler's theorem may legitimately do so; every other fraction rejects it.
    bool allow_zero_numerator = false;
    std::optional<Number> fixed_point;
    TailFn tail;
    std::string name;
  };

  GeneralizedCF(Number lead, TermFn terms);
  GeneralizedCF(Number lead, TermFn terms, Options options);

  /// Finite fraction from an explicit term list; index >= size() throws.
  static GeneralizedCF from_terms(Number lead, std::vector<Term> terms, std::string name = {});

  const Number& lead() const noexcept { return lead_; }
  /// Throws Error(parameter) for a zero partial numerator unless allowed.
  Term term(std::size_t n, int digits = 30) const;

  const std::optional<Number>& fixed_point() const noexcept { return options_.fixed_point; }
  bool has_tail() const noexcept { return static_cast<bool>(options_.tail); }
  Real tail(std::size_t level, int digits) const;
  const std::string& name() const noexcept { return options_.name; }
  /// Finite length, if the fraction was built from an explicit list.
  std::optional<std::size_t> size() const noexcept { return size_; }

  GeneralizedCF with_tail(TailFn tail) const;
  GeneralizedCF without_tail() const;

 private:
  Number lead_;
  TermFn terms_;
  Options options_;
  std::optional<std::size_t> size_;
};

/// Numerator/denominator sequences of the three-term recurrence
/// h_n = b_n h_{n-1} + a_n h_{n-2}, with h_{-1} = lead (resp. 1) and
/// h_{-2} = 1 (resp. 0). Entry n holds (P_n, Q_n).
struct ConvergentSequence {
  std::vector<Number> p;
  std::vector<Number> q;
};

ConvergentSequence convergent_sequence(const GeneralizedCF& cf, std::size_t n, int digits = 30);

/// N-th approximant, exact when the lead and all terms are exact. Returns
/// nullopt for an undefined approximant (zero denominator).
std::optional<Number> convergent(const GeneralizedCF& cf, std::size_t n, int digits = 30);

/// All approximants 0..n (nullopt entries are undefined).
std::vector<std::optional<Number>> convergents(const GeneralizedCF& cf, std::size_t n, int digits = 30);

enum class EvalStatus {
  converged,
  diverged_to_fixed_point,
  max_terms_reached,
  undefined_approximant_skipped,
};

const char* to_string(EvalStatus status) noexcept;

struct EvalReport {
  Real value;
  EvalStatus status = EvalStatus::max_terms_reached;
  std::size_t terms_used = 0;
  Real final_residual;
  std::size_t skipped = 0;  // undefined approximants passed over
};

struct EvalOptions {
  int digits = 30;
  /// Distance to the fixed point (in units of tol) under which a stalled
  /// evaluation is classified as divergence to that fixed point.
  double fixed_point_factor = 100.0;
};

/// Iterates approximants until two consecutive differences both fall below
/// `tol`, or `max_terms` approximants were formed. Uses tail-modified
/// approximants when the fraction carries a tail estimate.
EvalReport evaluate(const GeneralizedCF& cf, const Real& tol, std::size_t max_terms, EvalOptions options = {});

/// Backward recursion over levels N..0 with level N+1 seeded by `tail`.
/// Throws Error(undefined_approximant) on a zero denominator.
Number evaluate_with_tail(const GeneralizedCF& cf, std::size_t n, const Number& tail, int digits = 30);

/// True iff the last `window` defined approximants up to `depth` all lie
/// within `tol` of `candidate`. Throws Error(inconclusive) when fewer than
/// `window` defined approximants exist. Cannot tell convergence from
/// divergence to a fixed point on its own.
bool detect_fixed_point(const GeneralizedCF& cf, const Number& candidate, const Real& tol, std::size_t window,
                        std::size_t depth = 60, int digits = 30);

}  // namespace eulerfrac
