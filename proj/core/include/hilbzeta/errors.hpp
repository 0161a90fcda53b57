#pragma once

#include <stdexcept>
#include <string>

namespace hz {

enum class ErrorKind {
  EmptyGenerators,
  NonCoprime,
  NotTwoGenerator,
  NotMember,
  NotAGap,
  InvalidGapSet,
  IndexOutOfRange,
  FullModule,
  SingleGenerator,
  BudgetExceeded,
  UnsupportedSemigroup,
  NoStabilization,
  InterpolationBudgetExceeded,
  MethodDisagreement,
  TruncationTooSmall,
  NotAnIdeal,
  NonTriangular,
  InvalidArgument,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hz
