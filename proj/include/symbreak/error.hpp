#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symbreak {

enum class ErrorCode {
  kIndexOutOfRange,
  kSelfLoop,
  kBadRole,
  kLengthMismatch,
  kNotAutomorphism,
  kBadParams,
  kUnknownFamily,
  kBadContacts,
  kCappedGroup,
  kRMaxExceeded,
  kNoEdges,
  kNoSolutionBelowLimit,
  kOutOfTheoremScope,
  kTimeBudgetExceeded,
  kParseError,
  kIoError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace symbreak
