#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

/// Malformed input: bad shapes, unparsable documents, unsupported field.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// A mathematical condition failed (non-MHS triple, non-nilpotent operator,
/// failed self-check). Carries a human-readable witness.
class MathViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotNilpotent : public MathViolation {
 public:
  using MathViolation::MathViolation;
};

}  // namespace hodge
