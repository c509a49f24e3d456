#pragma once

#include <stdexcept>
#include <string>

namespace eulerfrac {

/// Broad classes of failure. The CLI maps these onto exit statuses.
enum class ErrorKind {
  parameter,            // invalid family parameter or argument
  domain,               // mathematical domain violation (e.g. Gamma(s), s <= 0)
  capability,           // request beyond configured limits (precision cap)
  undefined_approximant,
  inconclusive,
  divergence,
  quadrature,
  precondition,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a fraction evaluation reports divergence while convergence was
/// required. Carries the offending ratio index.
class DivergenceError : public Error {
 public:
  DivergenceError(long index, const std::string& what)
      : Error(ErrorKind::divergence, what), index_(index) {}

  long index() const noexcept { return index_; }

 private:
  long index_;
};

/// Quadrature failed to stabilise; the best estimate is kept for diagnostics.
class QuadratureError : public Error {
 public:
  QuadratureError(std::string estimate, const std::string& what)
      : Error(ErrorKind::quadrature, what), estimate_(std::move(estimate)) {}

  const std::string& estimate() const noexcept { return estimate_; }

 private:
  std::string estimate_;
};

}  // namespace eulerfrac
