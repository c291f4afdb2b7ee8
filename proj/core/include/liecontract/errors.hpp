#pragma once

#include <stdexcept>
#include <string>

namespace liecontract {

/// Raised by operations whose precondition is nilpotency.
class NotNilpotentError : public std::runtime_error {
 public:
  NotNilpotentError() : std::runtime_error("not nilpotent") {}
};

/// A structure tensor that should define a Lie algebra fails Jacobi.
class JacobiError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parametric law has an entry whose coefficient grows without bound.
class DivergentLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace liecontract
