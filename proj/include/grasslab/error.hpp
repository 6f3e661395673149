#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grasslab {

enum class ErrorCode {
  Singular,
  BudgetExceeded,
  AmbientMismatch,
  DimMismatch,
  EmptySet,
  ParamOutOfRange,
  Unsupported,
  CharTwo,
  NotABaseSubset,
  AmbiguousMatch,
  DegenerateParams,
  NotSelfDualLayer,
  NotOppositeClosed,
  NotInduced,
  BadInput,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// NotInduced with the key of a pair on which the map disagrees with every
/// candidate inducer.
class NotInducedError : public Error {
 public:
  NotInducedError(const std::string& what, std::string witness)
      : Error(ErrorCode::NotInduced, what + " (witness " + witness + ")"), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace grasslab
