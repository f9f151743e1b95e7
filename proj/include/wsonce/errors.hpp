#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace wsonce {

enum class ErrorCode {
  NonCoprimeGenerators,
  NotClosed,
  NotCoprime,
  NotCoprimeMu,
  BNotLarger,
  NonIntegral,
  GenusTooLarge,
  TooLarge,
  ConstraintViolated,
  InvalidInput,
  Io,
};

const char* to_string(ErrorCode code);

// Domain-level failure: bad mathematical input, not a programming error.
// CLI maps these to exit code 1. An optional (s, t) witness is carried for
// closure violations.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  DomainError(ErrorCode code, const std::string& message,
              std::pair<std::int64_t, std::int64_t> witness)
      : std::runtime_error(std::string(to_string(code)) + ": " + message +
                           " (witness " + std::to_string(witness.first) + " + " +
                           std::to_string(witness.second) + ")"),
        code_(code),
        witness_(witness) {}

  ErrorCode code() const { return code_; }
  const std::optional<std::pair<std::int64_t, std::int64_t>>& witness() const {
    return witness_;
  }

 private:
  ErrorCode code_;
  std::optional<std::pair<std::int64_t, std::int64_t>> witness_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonCoprimeGenerators: return "NonCoprimeGenerators";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotCoprimeMu: return "NotCoprimeMu";
    case ErrorCode::BNotLarger: return "BNotLarger";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::GenusTooLarge: return "GenusTooLarge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Io: return "Io";
  }
  return "UnknownError";
}

}  // namespace wsonce
