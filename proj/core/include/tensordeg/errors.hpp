#pragma once

#include <stdexcept>
#include <string>

namespace tensordeg {

/// Malformed group spec, unsupported family, or bad parameter.
class InvalidSpec : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size bound (max order, max cosets, enumeration guard) was hit.
class LimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operation called on an object in the wrong state (e.g. an incomplete coset table).
class StateError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// An internal cross-check failed. Always indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace tensordeg
