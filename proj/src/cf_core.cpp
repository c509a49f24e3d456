#include "eulerfrac/cf_core.hpp"

#include "eulerfrac/error.hpp"

#include <cmath>
#include <utility>

namespace eulerfrac {

GeneralizedCF::GeneralizedCF(Number lead, TermFn terms) : GeneralizedCF(std::move(lead), std::move(terms), Options{}) {}

GeneralizedCF::GeneralizedCF(Number lead, TermFn terms, Options options)
    : lead_(std::move(lead)), terms_(std::move(terms)), options_(std::move(options)) {
  if (!terms_) throw Error(ErrorKind::parameter, "continued fraction needs a term generator");
}

GeneralizedCF GeneralizedCF::from_terms(Number lead, std::vector<Term> terms, std::string name) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].a.is_zero())
      throw Error(ErrorKind::parameter, "zero partial numerator at index " + std::to_string(i));
  }
  const std::size_t n = terms.size();
  Options opts;
  opts.name = std::move(name);
  GeneralizedCF cf(std::move(lead),
                   [list = std::move(terms)](std::size_t i, int) -> Term {
                     if (i >= list.size())
                       throw Error(ErrorKind::parameter, "term index " + std::to_string(i) + " beyond finite fraction");
                     return list[i];
                   },
                   std::move(opts));
  cf.size_ = n;
  return cf;
}

Term GeneralizedCF::term(std::size_t n, int digits) const {
  Term t = terms_(n, digits);
  if (!options_.allow_zero_numerator && t.a.is_zero())
    throw Error(ErrorKind::parameter, "zero partial numerator at index " + std::to_string(n));
  return t;
}

Real GeneralizedCF::tail(std::size_t level, int digits) const {
  if (!options_.tail) return Real(0L, digits);
  return options_.tail(level, digits);
}

GeneralizedCF GeneralizedCF::with_tail(TailFn tail) const {
  GeneralizedCF copy = *this;
  copy.options_.tail = std::move(tail);
  return copy;
}

GeneralizedCF GeneralizedCF::without_tail() const { return with_tail(nullptr); }

namespace {

/// Forward three-term recurrence, exact (scaled integers) or in Real.
///
/// The exact mode keeps P and Q as integers: step n multiplies the recurrence
/// through by L_n = den(a_n) den(b_n), which rescales P_n and Q_n by the same
/// factor and so leaves every approximant unchanged.
class Forward {
 public:
  Forward(const GeneralizedCF& cf, int digits, bool exact) : digits_(digits), exact_(exact) {
    if (exact_) {
      const Rational& lead = cf.lead().exact();
      zp2_ = 1;
      zq2_ = 0;
      zp1_ = lead.get_num();
      zq1_ = lead.get_den();
      prev_scale_ = lead.get_den();
    } else {
      rp2_ = Real(1L, digits);
      rq2_ = Real(0L, digits);
      rp1_ = cf.lead().to_real(digits);
      rq1_ = Real(1L, digits);
    }
  }

  /// Consumes the next term. Exact mode requires exact terms.
  void step(const Term& t) {
    if (exact_) {
      const Rational& a = t.a.exact();
      const Rational& b = t.b.exact();
      const BigInt scale = a.get_den() * b.get_den();
      const BigInt cb = a.get_den() * b.get_num();
      const BigInt ca = a.get_num() * b.get_den() * prev_scale_;
      BigInt p = cb * zp1_ + ca * zp2_;
      BigInt q = cb * zq1_ + ca * zq2_;
      zp2_ = std::move(zp1_);
      zq2_ = std::move(zq1_);
      zp1_ = std::move(p);
      zq1_ = std::move(q);
      prev_scale_ = scale;
      if (++steps_ % 32 == 0) reduce();
      return;
    }
    const Real a = t.a.to_real(digits_);
    const Real b = t.b.to_real(digits_);
    Real p = b * rp1_ + a * rp2_;
    Real q = b * rq1_ + a * rq2_;
    rp2_ = std::move(rp1_);
    rq2_ = std::move(rq1_);
    rp1_ = std::move(p);
    rq1_ = std::move(q);
    if (++steps_ % 32 == 0) rescale();
  }

  std::optional<Number> value() const {
    if (exact_) {
      if (sgn(zq1_) == 0) return std::nullopt;
      Rational r(zp1_, zq1_);
      r.canonicalize();
      return Number(std::move(r));
    }
    if (rq1_.is_zero()) return std::nullopt;
    return Number(rp1_ / rq1_);
  }

  /// (P_n + t P_{n-1}) / (Q_n + t Q_{n-1}); Real mode only.
  std::optional<Real> modified(const Real& t) const {
    Real den = rq1_ + t * rq2_;
    if (den.is_zero()) return std::nullopt;
    return (rp1_ + t * rp2_) / den;
  }

 private:
  void reduce() {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), zp1_.get_mpz_t(), zq1_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zp2_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zq2_.get_mpz_t());
    if (g > 1) {
      mpz_divexact(zp1_.get_mpz_t(), zp1_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(zq1_.get_mpz_t(), zq1_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(zp2_.get_mpz_t(), zp2_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(zq2_.get_mpz_t(), zq2_.get_mpz_t(), g.get_mpz_t());
    }
  }

  void rescale() {
    const Real& ref = abs(rq1_) < abs(rp1_) ? rp1_ : rq1_;
    if (ref.is_zero() || !ref.is_finite()) return;
    const long e = mpfr_get_exp(ref.get());
    for (Real* r : {&rp1_, &rq1_, &rp2_, &rq2_}) mpfr_mul_2si(r->get(), r->get(), -e, MPFR_RNDN);
  }

  int digits_;
  bool exact_;
  std::size_t steps_ = 0;
  BigInt zp1_, zq1_, zp2_, zq2_, prev_scale_;
  Real rp1_, rq1_, rp2_, rq2_;
};

bool lead_exact(const GeneralizedCF& cf) { return cf.lead().is_exact(); }

std::vector<Term> collect_terms(const GeneralizedCF& cf, std::size_t n, int digits, bool& all_exact) {
  std::vector<Term> terms;
  terms.reserve(n + 1);
  all_exact = lead_exact(cf);
  for (std::size_t i = 0; i <= n; ++i) {
    terms.push_back(cf.term(i, digits));
    all_exact = all_exact && terms.back().a.is_exact() && terms.back().b.is_exact();
  }
  return terms;
}

}  // namespace

const char* to_string(EvalStatus status) noexcept {
  switch (status) {
    case EvalStatus::converged: return "converged";
    case EvalStatus::diverged_to_fixed_point: return "diverged_to_fixed_point";
    case EvalStatus::max_terms_reached: return "max_terms_reached";
    case EvalStatus::undefined_approximant_skipped: return "undefined_approximant_skipped";
  }
  return "unknown";
}

ConvergentSequence convergent_sequence(const GeneralizedCF& cf, std::size_t n, int digits) {
  ConvergentSequence seq;
  Number p2 = 1, q2 = 0, p1 = cf.lead(), q1 = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    const Term t = cf.term(i, digits);
    Number p = t.b * p1 + t.a * p2;
    Number q = t.b * q1 + t.a * q2;
    p2 = std::exchange(p1, p);
    q2 = std::exchange(q1, q);
    seq.p.push_back(std::move(p));
    seq.q.push_back(std::move(q));
  }
  return seq;
}

std::vector<std::optional<Number>> convergents(const GeneralizedCF& cf, std::size_t n, int digits) {
  bool all_exact = false;
  const std::vector<Term> terms = collect_terms(cf, n, digits, all_exact);
  Forward fw(cf, digits, all_exact);
  std::vector<std::optional<Number>> out;
  out.reserve(n + 1);
  for (const Term& t : terms) {
    fw.step(t);
    out.push_back(fw.value());
  }
  return out;
}

std::optional<Number> convergent(const GeneralizedCF& cf, std::size_t n, int digits) {
  bool all_exact = false;
  const std::vector<Term> terms = collect_terms(cf, n, digits, all_exact);
  Forward fw(cf, digits, all_exact);
  for (const Term& t : terms) fw.step(t);
  return fw.value();
}

EvalReport evaluate(const GeneralizedCF& cf, const Real& tol, std::size_t max_terms, EvalOptions options) {
  if (!(tol > 0)) throw Error(ErrorKind::parameter, "evaluate requires tol > 0");
  if (max_terms < 2) throw Error(ErrorKind::parameter, "evaluate requires max_terms >= 2");
  const int digits = options.digits;
  Forward fw(cf, digits, false);

  EvalReport report;
  std::vector<Real> recent;  // last three defined approximants
  for (std::size_t n = 0; n < max_terms; ++n) {
    fw.step(cf.term(n, digits));
    report.terms_used = n + 1;
    std::optional<Real> c;
    if (cf.has_tail()) {
      c = fw.modified(cf.tail(n + 1, digits));
    } else if (auto v = fw.value()) {
      c = v->to_real(digits);
    }
    if (!c || !c->is_finite()) {
      ++report.skipped;
      continue;
    }
    recent.push_back(*c);
    if (recent.size() > 3) recent.erase(recent.begin());
    if (recent.size() < 3) continue;

    report.final_residual = max(abs(recent[2] - recent[1]), abs(recent[2] - recent[0]));
    if (report.final_residual < tol) {
      report.value = recent[2];
      report.status = EvalStatus::converged;
      if (const auto& fp = cf.fixed_point()) {
        const Real limit = tol * Real(options.fixed_point_factor, digits);
        if (abs(report.value - fp->to_real(digits)) <= limit) report.status = EvalStatus::diverged_to_fixed_point;
      }
      return report;
    }
  }
  if (recent.empty()) {
    report.value = Real(0L, digits);
    mpfr_set_nan(report.value.get());
    report.final_residual = report.value;
    report.status = EvalStatus::undefined_approximant_skipped;
    return report;
  }
  report.value = recent.back();
  if (recent.size() < 3) report.final_residual = recent.size() == 2 ? abs(recent[1] - recent[0]) : Real(0L, digits);
  report.status = EvalStatus::max_terms_reached;
  return report;
}

Number evaluate_with_tail(const GeneralizedCF& cf, std::size_t n, const Number& tail, int digits) {
  Number v = tail;
  for (std::size_t level = n + 1; level-- > 0;) {
    const Term t = cf.term(level, digits);
    const Number den = t.b + v;
    if (den.is_zero())
      throw Error(ErrorKind::undefined_approximant, "zero denominator at level " + std::to_string(level));
    v = t.a / den;
  }
  return cf.lead() + v;
}

bool detect_fixed_point(const GeneralizedCF& cf, const Number& candidate, const Real& tol, std::size_t window,
                        std::size_t depth, int digits) {
  if (window < 3) throw Error(ErrorKind::parameter, "detect_fixed_point requires window >= 3");
  const auto all = convergents(cf, depth, digits);
  std::vector<Number> defined;
  for (const auto& c : all)
    if (c) defined.push_back(*c);
  if (defined.size() < window)
    throw Error(ErrorKind::inconclusive, "only " + std::to_string(defined.size()) +
                                             " defined approximants, window needs " + std::to_string(window));
  const Real target = candidate.to_real(digits);
  for (std::size_t i = defined.size() - window; i < defined.size(); ++i) {
    if (!(abs(defined[i].to_real(digits) - target) < tol)) return false;
  }
  return true;
}

}  // namespace eulerfrac
