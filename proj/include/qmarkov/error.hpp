#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmarkov {

enum class ErrorCode {
  NonDivisible,
  EmptySupport,
  NotNeighbors,
  Malformed,
  MalformedInput,
  UnsupportedLabel,
  OracleBoundExceeded,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonDivisible: return "NON_DIVISIBLE";
    case ErrorCode::EmptySupport: return "EMPTY_SUPPORT";
    case ErrorCode::NotNeighbors: return "NOT_NEIGHBORS";
    case ErrorCode::Malformed: return "MALFORMED";
    case ErrorCode::MalformedInput: return "MALFORMED_INPUT";
    case ErrorCode::UnsupportedLabel: return "UNSUPPORTED_LABEL";
    case ErrorCode::OracleBoundExceeded: return "ORACLE_BOUND_EXCEEDED";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace qmarkov
