#pragma once

#include <stdexcept>
#include <string>

namespace zonodeep {

enum class ErrorKind {
  Parse,
  Domain,
  SingularMatrix,
  RankDeficient,
  NotInterior,
  NoInteriorPoint,
  NotOnBoundary,
  InstanceTooLarge,
  BudgetExceeded,
};

// Single exception type for the whole library; `kind` drives the CLI exit
// code and lets tests assert which precondition fired.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

// Exit codes: 2 = malformed input, 3 = violated mathematical precondition,
// 4 = instance rejected by a resource guard.
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
      return 2;
    case ErrorKind::InstanceTooLarge:
    case ErrorKind::BudgetExceeded:
      return 4;
    default:
      return 3;
  }
}

}  // namespace zonodeep
