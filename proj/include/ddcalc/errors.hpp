#pragma once

#include <stdexcept>
#include <string>

namespace ddcalc {

// Malformed text input; `position` is a 0-based offset into the source string.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// exact_divide: no quotient over the integers exists.
class NotDivisible : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// forest trim at an index that is not in the left terminal set.
class NotTerminal : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ArityMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// pipe dream staircase larger than the configured bound.
class BoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ConstantTermNonzero : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace ddcalc
