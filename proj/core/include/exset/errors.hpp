#pragma once

#include <stdexcept>
#include <string>

namespace exset {

/// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class ErrorKind {
  Schema,               // malformed instance / unknown keys      (exit 2)
  Precondition,         // violated operation precondition        (exit 3)
  UnsupportedInput,     // input outside the implemented fragment (exit 3)
  BudgetExceeded,       // depth / size / search budget exhausted (exit 4)
  InsufficientPrecision,// value unresolved at working precision  (exit 5)
  UnresolvedTail,       // series tail cannot settle the question (exit 5)
  Undecided,            // divisibility etc. undecided at precision (exit 5)
  Internal,             // invariant breach; always a bug         (exit 1)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), kind_(kind), name_(std::move(name)) {}

  ErrorKind kind() const { return kind_; }
  /// Stable machine-readable error name, e.g. "not-outside-S".
  const std::string& name() const { return name_; }

 private:
  ErrorKind kind_;
  std::string name_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& name, const std::string& what) {
  throw Error(kind, name, what);
}

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Schema: return 2;
    case ErrorKind::Precondition:
    case ErrorKind::UnsupportedInput: return 3;
    case ErrorKind::BudgetExceeded: return 4;
    case ErrorKind::InsufficientPrecision:
    case ErrorKind::UnresolvedTail:
    case ErrorKind::Undecided: return 5;
    case ErrorKind::Internal: return 1;
  }
  return 1;
}

}  // namespace exset
