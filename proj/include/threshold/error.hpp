#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace threshold {

enum class ErrorCode {
  kBadChar,
  kTooShort,
  kFirstBit,
  kDisconnected,
  kNotEigenvector,
  kNotEigenvalue,
  kNotSsGroup,
  kNotSs,
  kTooLarge,
  kTooSmall,
  kJoinGap,
  kVerifyFailed,
  kBudget,
  kFixed,
  kPrecondition,
  kParse,
};

/// Stable identifier for an error code, e.g. "E_DISCONNECTED".
std::string_view code_name(ErrorCode code);

/// True for codes that indicate a broken internal invariant rather than bad input.
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace threshold
