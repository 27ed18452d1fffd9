#pragma once

#include <stdexcept>
#include <string>

namespace lrslab {

// Malformed input: bad spec file, violated precondition, unknown option.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap was hit (term bit budget, sieve bound, search
// limit). Distinct from an UNDECIDED verdict.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Root isolation could not separate intervals within the precision cap.
class PrecisionExhausted : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

// Internal consistency failure; indicates a bug rather than bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lrslab
