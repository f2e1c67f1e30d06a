#include "symbreak/error.hpp"

namespace symbreak {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kBadRole: return "BadRole";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotAutomorphism: return "NotAutomorphism";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kUnknownFamily: return "UnknownFamily";
    case ErrorCode::kBadContacts: return "BadContacts";
    case ErrorCode::kCappedGroup: return "CappedGroup";
    case ErrorCode::kRMaxExceeded: return "RMaxExceeded";
    case ErrorCode::kNoEdges: return "NoEdges";
    case ErrorCode::kNoSolutionBelowLimit: return "NoSolutionBelowLimit";
    case ErrorCode::kOutOfTheoremScope: return "OutOfTheoremScope";
    case ErrorCode::kTimeBudgetExceeded: return "TimeBudgetExceeded";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace symbreak
