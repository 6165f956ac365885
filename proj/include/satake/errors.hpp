#pragma once

#include <stdexcept>
#include <string>

namespace satake {

enum class ErrorCode {
  InvalidType,
  UnsupportedPreset,
  GroupTooLarge,
  ShapeMismatch,
  NotDominant,
  NotDominantForJ,
  DimensionCap,
  BasisShapeMismatch,
  EnumerationCap,
  NotPSmall,
  WrongMode,
  SearchBoxExhausted,
  WeightOutOfRange,
  SizeCap,
  JacobiFailure,
  AssumptionViolated,
  OrthogonalityFails,
  ConfigError,
  Overflow,
  Internal,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::UnsupportedPreset: return "UnsupportedPreset";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NotDominantForJ: return "NotDominantForJ";
    case ErrorCode::DimensionCap: return "DimensionCap";
    case ErrorCode::BasisShapeMismatch: return "BasisShapeMismatch";
    case ErrorCode::EnumerationCap: return "EnumerationCap";
    case ErrorCode::NotPSmall: return "NotPSmall";
    case ErrorCode::WrongMode: return "WrongMode";
    case ErrorCode::SearchBoxExhausted: return "SearchBoxExhausted";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::JacobiFailure: return "JacobiFailure";
    case ErrorCode::AssumptionViolated: return "AssumptionViolated";
    case ErrorCode::OrthogonalityFails: return "OrthogonalityFails";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace satake
