#pragma once

#include <stdexcept>
#include <string>

namespace midiso {

/// Malformed textual input (edge lists, graph6, generator specs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain: out-of-range vertex, parameter
/// below a family's minimum, violated precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The 64-vertex cap would be exceeded.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Random generation gave up after its resample budget.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace midiso
