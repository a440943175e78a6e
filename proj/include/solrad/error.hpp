#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace solrad {

enum class ErrorCode {
  MalformedCycle,
  PointOutOfRange,
  DegreeMismatch,
  EmptyGeneratorList,
  GroupTooLarge,
  NotNormal,
  NotSolvable,
  TrivialGroup,
  QuotientNotSolvable,
  VNotMinimalNormal,
  SearchBudgetExceeded,
  BudgetExceeded,
  EmptyClass,
  TheoremViolationSuspected,
  NotPrimeOrder,
  OrderConditionViolated,
  ElementNotInGroup,
  ZeroVector,
  ModularCharacteristic,
  HypothesisNotMet,
  ParameterOutOfRange,
  OrderMismatch,
  IoError,
  MalformedFile,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedCycle: return "MalformedCycle";
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::EmptyGeneratorList: return "EmptyGeneratorList";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotSolvable: return "NotSolvable";
    case ErrorCode::TrivialGroup: return "TrivialGroup";
    case ErrorCode::QuotientNotSolvable: return "QuotientNotSolvable";
    case ErrorCode::VNotMinimalNormal: return "VNotMinimalNormal";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::TheoremViolationSuspected: return "TheoremViolationSuspected";
    case ErrorCode::NotPrimeOrder: return "NotPrimeOrder";
    case ErrorCode::OrderConditionViolated: return "OrderConditionViolated";
    case ErrorCode::ElementNotInGroup: return "ElementNotInGroup";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ModularCharacteristic: return "ModularCharacteristic";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::MalformedFile: return "MalformedFile";
  }
  return "Unknown";
}

/// The single exception type thrown by the library; `code()` tells callers
/// which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace solrad
