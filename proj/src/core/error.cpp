#include "error.hpp"

namespace fpt {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
    case ErrorKind::NotInMaximalIdeal: return "NotInMaximalIdeal";
    case ErrorKind::ZeroGenerator: return "ZeroGenerator";
    case ErrorKind::EmptyBlock: return "EmptyBlock";
    case ErrorKind::NonUniqueMaximalPoint: return "NonUniqueMaximalPoint";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Internal: return "InternalError";
  }
  return "InternalError";
}

ErrorCategory error_category(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Syntax:
    case ErrorKind::UnknownVariable:
    case ErrorKind::NegativeExponent:
    case ErrorKind::Domain:
    case ErrorKind::RingMismatch:
    case ErrorKind::NotInMaximalIdeal:
    case ErrorKind::ZeroGenerator:
      return ErrorCategory::Validation;
    case ErrorKind::DenominatorDivisibleByP:
    case ErrorKind::EmptyBlock:
    case ErrorKind::NonUniqueMaximalPoint:
    case ErrorKind::NotDiagonal:
      return ErrorCategory::Hypothesis;
    case ErrorKind::DimensionTooLarge:
    case ErrorKind::BudgetExceeded:
      return ErrorCategory::Budget;
    case ErrorKind::Internal:
      return ErrorCategory::Internal;
  }
  return ErrorCategory::Internal;
}

}  // namespace fpt
