#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nctorus {

enum class ErrorCode {
  InvalidTheta,
  InvalidDegree,
  InvalidRank,
  ParamMismatch,
  RankMismatch,
  InvalidScenario,
  NonConstantConnection,
  NotFlat,
  PathNotAssociated,
  ZeroWeight,
  NonIntegralWeight,
  UnsupportedProduct,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTheta: return "InvalidTheta";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::InvalidScenario: return "InvalidScenario";
    case ErrorCode::NonConstantConnection: return "NonConstantConnection";
    case ErrorCode::NotFlat: return "NotFlat";
    case ErrorCode::PathNotAssociated: return "PathNotAssociated";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::NonIntegralWeight: return "NonIntegralWeight";
    case ErrorCode::UnsupportedProduct: return "UnsupportedProduct";
  }
  return "Unknown";
}

/// Malformed input: bad parameters, shape mismatches, schema violations.
constexpr bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTheta:
    case ErrorCode::InvalidDegree:
    case ErrorCode::InvalidRank:
    case ErrorCode::ParamMismatch:
    case ErrorCode::RankMismatch:
    case ErrorCode::InvalidScenario:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nctorus
