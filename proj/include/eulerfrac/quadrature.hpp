#pragma once

#include "eulerfrac/real.hpp"

#include <functional>

namespace eulerfrac {

using Integrand = std::function<Real(const Real& x)>;

struct QuadratureOptions {
  /// Extra decimal digits carried internally above the requested precision.
  int guard_digits = 10;
  /// Level halvings of the step before giving up (starting from h = 1).
  int max_levels = 12;
};

/// Tanh-sinh quadrature of f over (0, 1). Levels are refined until two
/// successive estimates agree to the requested precision (relative), else
/// QuadratureError carrying the last estimate.
Real integrate_finite(const Integrand& f, int digits, QuadratureOptions options = {});

/// Exp-sinh quadrature of f over (0, inf); f must decay at infinity.
Real integrate_halfline(const Integrand& f, int digits, QuadratureOptions options = {});

}  // namespace eulerfrac
