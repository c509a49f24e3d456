#include "eulerfrac/quadrature.hpp"

#include "eulerfrac/error.hpp"

#include <functional>

namespace eulerfrac {

namespace {

/// One abscissa/weight evaluation of the transformed integrand at t.
using Node = std::function<Real(const Real& t)>;

constexpr double kMaxT = 9.0;

/// Sum of node(t) over t = t0 + j*step, j = 0, 1, 2, ..., walking outward
/// until consecutive terms are negligible against `scale`.
Real walk(const Node& node, const Real& t0, const Real& step, const Real& eps, const Real& scale) {
  Real sum(0L, t0.digits());
  Real t = t0;
  int small = 0;
  while (abs(t) <= Real(kMaxT, t0.digits())) {
    const Real term = node(t);
    if (!term.is_finite()) throw QuadratureError(sum.to_string(12), "integrand not finite at t = " + t.to_string(12));
    sum += term;
    const Real ref = max(abs(scale), abs(sum));
    if (abs(term) <= eps * ref) {
      if (++small >= 2) break;
    } else {
      small = 0;
    }
    t += step;
  }
  return sum;
}

Real integrate_de(const Node& node, int digits, const QuadratureOptions& options) {
  const int wp = digits + options.guard_digits;
  const Real eps = pow(Real(10L, wp), -(wp + 2));
  const Real target = pow(Real(10L, wp), -(digits + 2));

  // Level 0: h = 1, all integer t.
  Real h(1L, wp);
  Real center = node(Real(0L, wp));
  Real raw = center;
  raw += walk(node, Real(1L, wp), h, eps, center);
  raw += walk(node, Real(-1L, wp), -h, eps, center);
  Real estimate = raw * h;

  for (int level = 1; level <= options.max_levels; ++level) {
    h /= 2;
    // New points are the odd multiples of h.
    Real fresh = walk(node, h, h * 2, eps, raw);
    fresh += walk(node, -h, -(h * 2), eps, raw);
    raw += fresh;
    const Real next = raw * h;
    const Real diff = abs(next - estimate);
    estimate = next;
    if (level >= 3 && diff <= target * max(abs(estimate), Real(1L, wp) * eps)) return estimate.with_digits(digits);
  }
  throw QuadratureError(estimate.to_string(20), "quadrature did not converge within " +
                                                    std::to_string(options.max_levels) + " levels");
}

}  // namespace

Real integrate_finite(const Integrand& f, int digits, QuadratureOptions options) {
  const int wp = digits + options.guard_digits;
  const Real half_pi = pi(wp) / 2;
  // x = 1/(1 + e^{-u}), u = pi sinh t, dx/dt = pi cosh t x (1 - x)
  const Node node = [&](const Real& t) {
    const Real u = half_pi * 2 * sinh(t);
    const Real x = Real(1L, wp) / (exp(-u) + 1);
    const Real one_minus_x = Real(1L, wp) / (exp(u) + 1);
    const Real w = half_pi * 2 * cosh(t) * x * one_minus_x;
    if (w.is_zero()) return Real(0L, wp);
    return w * f(x);
  };
  return integrate_de(node, digits, options);
}

Real integrate_halfline(const Integrand& f, int digits, QuadratureOptions options) {
  const int wp = digits + options.guard_digits;
  const Real half_pi = pi(wp) / 2;
  // x = exp(pi/2 sinh t), dx/dt = x pi/2 cosh t
  const Node node = [&](const Real& t) {
    const Real x = exp(half_pi * sinh(t));
    const Real w = x * half_pi * cosh(t);
    if (w.is_zero()) return Real(0L, wp);
    const Real fx = f(x);
    if (fx.is_zero()) return Real(0L, wp);
    return w * fx;
  };
  return integrate_de(node, digits, options);
}

}  // namespace eulerfrac
