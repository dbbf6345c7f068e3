#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace goodprime {

/// Stable error codes. The CLI reports them verbatim on stderr.
enum class ErrorCode {
  UnsupportedType,
  InvalidCoxeterMatrix,
  BudgetExceeded,
  ClosureBudgetExceeded,
  InvalidS,
  FieldMismatch,
  CrossCheckFailed,
  SingularMarkMatrix,
  NoConvergence,
  InvalidAlgebra,
  LabelMismatch,
  DegenerateArrangement,
  NotLeftRegularBand,
  InvalidArgument,
};

inline constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::InvalidCoxeterMatrix: return "InvalidCoxeterMatrix";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorCode::InvalidS: return "InvalidS";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorCode::SingularMarkMatrix: return "SingularMarkMatrix";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::DegenerateArrangement: return "DegenerateArrangement";
    case ErrorCode::NotLeftRegularBand: return "NotLeftRegularBand";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// True for the codes that signal an exhausted resource rather than a wrong answer.
inline constexpr bool is_budget_error(ErrorCode code) {
  return code == ErrorCode::BudgetExceeded || code == ErrorCode::ClosureBudgetExceeded;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace goodprime
