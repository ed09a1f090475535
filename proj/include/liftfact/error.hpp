#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liftfact {

enum class ErrorCode {
  kDivisionByZero,
  kZeroDivisor,
  kPrecondition,
  kNotMonomialDeterminant,
  kZeroPivot,
  kInvalidDirective,
  kNotTerminal,
  kStrategyExhausted,
  kUnsolvable,
  kReconstructionMismatch,
  kParse,
  kIo,
  kVerificationFailed,
};

std::string_view error_code_name(ErrorCode code);

// Every module reports failures with this; the CLI maps code() to its
// machine-readable error record.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace liftfact
