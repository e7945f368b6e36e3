#include "ccm/errors.hpp"

namespace ccm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddTotalDegree: return "OddTotalDegree";
    case ErrorCode::ZeroDegree: return "ZeroDegree";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::SubcriticalDistribution: return "SubcriticalDistribution";
    case ErrorCode::Degree1Required: return "Degree1Required";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::InvalidMove: return "InvalidMove";
    case ErrorCode::InsufficientSurplus: return "InsufficientSurplus";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

BudgetExhausted::BudgetExhausted(std::uint64_t attempts, const std::string& message)
    : Error(ErrorCode::BudgetExhausted, message), attempts_(attempts) {}

}  // namespace ccm
