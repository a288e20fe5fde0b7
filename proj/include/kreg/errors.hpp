#pragma once

#include <stdexcept>

namespace kreg {

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's mathematical precondition does not hold for its input
/// (e.g. a zerodivisor passed where a regular element is required).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kreg
