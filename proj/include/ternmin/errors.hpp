#pragma once

#include <stdexcept>
#include <string>

namespace ternmin {

/// A caller supplied parameters outside an operation's contract.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exponential-cost path was refused before it started.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, int required_m, int cap_m)
      : std::runtime_error(what), required_m_(required_m), cap_m_(cap_m) {}

  int required_m() const { return required_m_; }
  int cap_m() const { return cap_m_; }

 private:
  int required_m_;
  int cap_m_;
};

/// Two routes that must agree did not; indicates an engine bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ternmin
