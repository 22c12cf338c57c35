#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uqsl2 {

enum class ErrorCode {
  ContractViolation,
  DimensionMismatch,
  Singular,
  NotNilpotent,
  DuplicateNode,
  Inconsistent,
  MixedType,
  NonIntegralWeight,
  UnknownSymbol,
  RelationFailure,
  NotTypeOne,
  UnknownOperator,
  ConfigError,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ContractViolation: return "CONTRACT_VIOLATION";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::Singular: return "SINGULAR";
    case ErrorCode::NotNilpotent: return "NOT_NILPOTENT";
    case ErrorCode::DuplicateNode: return "DUPLICATE_NODE";
    case ErrorCode::Inconsistent: return "INCONSISTENT";
    case ErrorCode::MixedType: return "MIXED_TYPE";
    case ErrorCode::NonIntegralWeight: return "NON_INTEGRAL_WEIGHT";
    case ErrorCode::UnknownSymbol: return "UNKNOWN_SYMBOL";
    case ErrorCode::RelationFailure: return "RELATION_FAILURE";
    case ErrorCode::NotTypeOne: return "NOT_TYPE_ONE";
    case ErrorCode::UnknownOperator: return "UNKNOWN_OPERATOR";
    case ErrorCode::ConfigError: return "CONFIG_ERROR";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

// Every failure in the library is reported through this one exception type;
// callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace uqsl2
