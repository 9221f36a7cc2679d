#ifndef REVSPEC_ERROR_HPP
#define REVSPEC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace revspec {

enum class ErrorKind {
  Syntax,
  Declaration,
  HeadOfAtom,
  XorClash,
  PopOnAtom,
  PopNonNilDest,
  PushSameVar,
  AssertionFailed,
  ComeFrom,
  NonNilAtEntry,
  NonNilAtExit,
  StepLimit,
  Arity,
  UnknownLabel,
  MachineStuck,
  Nondeterministic,
  NotStandardPosition,
  BadTape,
  Division,
  Specialization,
  Usage,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::Declaration: return "declaration error";
    case ErrorKind::HeadOfAtom: return "hd/tl of atom";
    case ErrorKind::XorClash: return "xor clash";
    case ErrorKind::PopOnAtom: return "pop on atom";
    case ErrorKind::PopNonNilDest: return "pop into non-nil variable";
    case ErrorKind::PushSameVar: return "push/pop on a single variable";
    case ErrorKind::AssertionFailed: return "assertion failed";
    case ErrorKind::ComeFrom: return "come-from violation";
    case ErrorKind::NonNilAtEntry: return "non-nil variable at entry";
    case ErrorKind::NonNilAtExit: return "non-nil variable at exit";
    case ErrorKind::StepLimit: return "step limit exceeded";
    case ErrorKind::Arity: return "arity mismatch";
    case ErrorKind::UnknownLabel: return "unknown label";
    case ErrorKind::MachineStuck: return "machine stuck";
    case ErrorKind::Nondeterministic: return "nondeterministic machine";
    case ErrorKind::NotStandardPosition: return "not in standard position";
    case ErrorKind::BadTape: return "bad tape";
    case ErrorKind::Division: return "division error";
    case ErrorKind::Specialization: return "specialization error";
    case ErrorKind::Usage: return "usage error";
  }
  return "error";
}

/// Every failure in the library is reported as an Error carrying its kind, so
/// callers (tests, CLI exit codes) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace revspec

#endif
