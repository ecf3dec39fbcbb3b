#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gztoda {

enum class ErrorCode {
  DivZero,
  VarMismatch,
  BadStep,
  DegenerateSampler,
  Index,
  SizeLimit,
  Mismatch,
  NotTorus,
  BadMatrix,
  Pole,
  InsufficientTruncation,
  ContourObstruction,
  Config,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivZero: return "DIV_ZERO";
    case ErrorCode::VarMismatch: return "VAR_MISMATCH";
    case ErrorCode::BadStep: return "BAD_STEP";
    case ErrorCode::DegenerateSampler: return "DEGENERATE_SAMPLER";
    case ErrorCode::Index: return "INDEX";
    case ErrorCode::SizeLimit: return "SIZE_LIMIT";
    case ErrorCode::Mismatch: return "MISMATCH";
    case ErrorCode::NotTorus: return "NOT_TORUS";
    case ErrorCode::BadMatrix: return "BAD_MATRIX";
    case ErrorCode::Pole: return "POLE";
    case ErrorCode::InsufficientTruncation: return "INSUFFICIENT_TRUNCATION";
    case ErrorCode::ContourObstruction: return "CONTOUR_OBSTRUCTION";
    case ErrorCode::Config: return "CONFIG";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gztoda
