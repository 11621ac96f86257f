#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trigweyl {

enum class ErrorCode {
  DimensionMismatch,
  ZeroRoot,
  NotInLattice,
  HeightCollision,
  NotInvariant,
  OrbitOutOfTable,
  NotDivisible,
  ZeroPolynomial,
  UnknownOrbit,
  InternalOrderingViolation,
  CrossCheckMismatch,
  TieInLeadingWeight,
  FlagViolation,
  DefectiveBlock,
  FitResidualTooLarge,
  SingularSample,
  OnWall,
  ParseError,
  CacheError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the engine. `code()` identifies the condition; the
/// message carries the diagnostic (offending monomial, required norm, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a computation touches a frequency beyond the orbit table's
/// cutoff. `required_norm()` is the smallest cutoff that would have sufficed.
class OrbitOutOfTable : public Error {
 public:
  OrbitOutOfTable(int required_norm, int table_norm)
      : Error(ErrorCode::OrbitOutOfTable,
              "orbit of norm " + std::to_string(required_norm) +
                  " needed but table stops at norm " + std::to_string(table_norm)),
        required_norm_(required_norm) {}

  int required_norm() const noexcept { return required_norm_; }

 private:
  int required_norm_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroRoot: return "ZeroRoot";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::HeightCollision: return "HeightCollision";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::OrbitOutOfTable: return "OrbitOutOfTable";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::UnknownOrbit: return "UnknownOrbit";
    case ErrorCode::InternalOrderingViolation: return "InternalOrderingViolation";
    case ErrorCode::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorCode::TieInLeadingWeight: return "TieInLeadingWeight";
    case ErrorCode::FlagViolation: return "FlagViolation";
    case ErrorCode::DefectiveBlock: return "DefectiveBlock";
    case ErrorCode::FitResidualTooLarge: return "FitResidualTooLarge";
    case ErrorCode::SingularSample: return "SingularSample";
    case ErrorCode::OnWall: return "OnWall";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CacheError: return "CacheError";
  }
  return "Unknown";
}

}  // namespace trigweyl
