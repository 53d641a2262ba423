#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

/// Failure classes. Each one maps to exactly one CLI exit code.
enum class ErrorKind {
  input,        // syntax, undeclared names, arity, ring or variable mismatch
  hypothesis,   // a theorem hypothesis or operation precondition does not hold
  horizon,      // a bounded search ran out (horizon, retry cap, fit window)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& what) { throw Error(ErrorKind::input, what); }
[[noreturn]] inline void fail_hypothesis(const std::string& what) {
  throw Error(ErrorKind::hypothesis, what);
}
[[noreturn]] inline void fail_horizon(const std::string& what) { throw Error(ErrorKind::horizon, what); }

inline int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::input: return 1;
    case ErrorKind::hypothesis: return 2;
    case ErrorKind::horizon: return 3;
  }
  return 2;
}

}  // namespace blowup
