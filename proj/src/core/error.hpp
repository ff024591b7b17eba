#pragma once

#include <stdexcept>
#include <string>

namespace fpt {

enum class ErrorKind {
  Syntax,
  UnknownVariable,
  NegativeExponent,
  Domain,
  RingMismatch,
  DenominatorDivisibleByP,
  NotInMaximalIdeal,
  ZeroGenerator,
  EmptyBlock,
  NonUniqueMaximalPoint,
  NotDiagonal,
  DimensionTooLarge,
  BudgetExceeded,
  Internal,
};

// Coarse grouping used for exit codes and C status values.
enum class ErrorCategory { Validation, Hypothesis, Budget, Internal };

const char* error_kind_name(ErrorKind kind) noexcept;
ErrorCategory error_category(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept { return error_category(kind_); }

 private:
  ErrorKind kind_;
};

// Parse failures carry the character offset into the source text.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& message, std::size_t position)
      : Error(kind, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fpt
