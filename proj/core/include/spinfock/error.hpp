#pragma once

#include <stdexcept>
#include <string>

namespace spinfock {

enum class ErrorCode {
  InvalidArgument,
  NotInDPh,
  NotRegular,
  UncoveredDisorder,
  MixedWeight,
  NotDivisible,
  DegreeMismatch,
  MissingContext,
  TheoremViolation,
  InconsistentFixture,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spinfock
