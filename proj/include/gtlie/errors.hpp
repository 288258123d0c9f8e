#pragma once

#include <stdexcept>
#include <string>

namespace gtlie {

// Malformed user input: bad letters, bad ribbon orders, out-of-range options.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed (equal ends, odd genus parity, trivial split).
// Always a bug, never data.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantViolation(what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ContractViolation(what);
}

}  // namespace detail
}  // namespace gtlie
