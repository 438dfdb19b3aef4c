#pragma once

#include <stdexcept>
#include <string>

namespace quasidim {

/// Malformed or inconsistent caller input (bad JSON, wrong arity, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Raised when a quasi-polynomial fitted from samples disagrees with the
/// counter on the extra check samples.
class HypothesisViolation : public std::runtime_error {
 public:
  HypothesisViolation() : std::runtime_error("period/degree hypothesis violated") {}
  explicit HypothesisViolation(const std::string& what)
      : std::runtime_error("period/degree hypothesis violated: " + what) {}
};

/// A desk-scale limit (enumeration cap, subset explosion, dimension) was hit.
class GuardRailExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundedPolytope : public InvalidInput {
 public:
  UnboundedPolytope() : InvalidInput("polytope is unbounded") {}
};

class EmptyPolytope : public InvalidInput {
 public:
  EmptyPolytope() : InvalidInput("polytope is empty") {}
};

}  // namespace quasidim
