#include "threshold/error.hpp"

namespace threshold {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadChar: return "E_BAD_CHAR";
    case ErrorCode::kTooShort: return "E_TOO_SHORT";
    case ErrorCode::kFirstBit: return "E_FIRST_BIT";
    case ErrorCode::kDisconnected: return "E_DISCONNECTED";
    case ErrorCode::kNotEigenvector: return "E_NOT_EIGENVECTOR";
    case ErrorCode::kNotEigenvalue: return "E_NOT_EIGENVALUE";
    case ErrorCode::kNotSsGroup: return "E_NOT_SS_GROUP";
    case ErrorCode::kNotSs: return "E_NOT_SS";
    case ErrorCode::kTooLarge: return "E_TOO_LARGE";
    case ErrorCode::kTooSmall: return "E_TOO_SMALL";
    case ErrorCode::kJoinGap: return "E_JOIN_GAP";
    case ErrorCode::kVerifyFailed: return "E_VERIFY_FAILED";
    case ErrorCode::kBudget: return "E_BUDGET";
    case ErrorCode::kFixed: return "E_FIXED";
    case ErrorCode::kPrecondition: return "E_PRECONDITION";
    case ErrorCode::kParse: return "E_PARSE";
  }
  return "E_UNKNOWN";
}

bool is_internal(ErrorCode code) {
  return code == ErrorCode::kNotEigenvector || code == ErrorCode::kVerifyFailed;
}

}  // namespace threshold
