#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ccm {

enum class ErrorCode {
  OddTotalDegree,
  ZeroDegree,
  EmptySequence,
  InvalidDistribution,
  SubcriticalDistribution,
  Degree1Required,
  DomainError,
  EpsilonTooLarge,
  InvalidMove,
  InsufficientSurplus,
  TooLarge,
  NonIntegerResult,
  BudgetExhausted,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every recoverable failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the rejection samplers; carries the number of attempts spent.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(std::uint64_t attempts, const std::string& message);

  std::uint64_t attempts() const noexcept { return attempts_; }

 private:
  std::uint64_t attempts_;
};

}  // namespace ccm
