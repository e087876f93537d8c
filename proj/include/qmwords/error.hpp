#pragma once

#include <stdexcept>
#include <string>

namespace qmw {

enum class ErrorCode {
  ParseError,
  AlphabetMismatch,
  IndexOutOfRange,
  NotLeftKCauchy,
  MalformedPresentation,
  NotAscending,
  TooLarge,
  PreconditionViolated,
  NotReflexive,
  NotAntisymmetric,
  NotTransitive,
  OrderAxiomViolation,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

/// All error paths in the library throw this one type; the code names the
/// contract that was violated and `position` is set for parse errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, long position = -1)
      : std::runtime_error(std::move(message)), code_(code), position_(position) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }
  long position() const { return position_; }

 private:
  ErrorCode code_;
  long position_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string message, long position = -1) {
  throw Error(code, std::move(message), position);
}

}  // namespace qmw
