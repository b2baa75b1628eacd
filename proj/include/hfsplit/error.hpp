#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hfsplit {

enum class ErrorKind {
  DimensionMismatch,
  NonSquare,
  InvarianceViolation,
  NotAChainMap,
  SpecialConditionViolation,
  DSquaredNonzero,
  ShapeMismatch,
  DichotomyViolation,
  InclusionViolation,
  RelationViolation,
  NoSolution,
  StepMismatch,
  CaseMismatch,
  Infeasible,
  ParseError,
  UnknownEntry,
  IoError,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::InvarianceViolation: return "InvarianceViolation";
    case ErrorKind::NotAChainMap: return "NotAChainMap";
    case ErrorKind::SpecialConditionViolation: return "SpecialConditionViolation";
    case ErrorKind::DSquaredNonzero: return "DSquaredNonzero";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DichotomyViolation: return "DichotomyViolation";
    case ErrorKind::InclusionViolation: return "InclusionViolation";
    case ErrorKind::RelationViolation: return "RelationViolation";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::StepMismatch: return "StepMismatch";
    case ErrorKind::CaseMismatch: return "CaseMismatch";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

// Every failure raised by the library carries a kind so callers (and the CLI
// exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Parse and I/O problems are input-format errors; everything else is a
  // violated mathematical invariant.
  bool is_input_error() const noexcept {
    return kind_ == ErrorKind::ParseError || kind_ == ErrorKind::IoError ||
           kind_ == ErrorKind::UnknownEntry;
  }

 private:
  ErrorKind kind_;
};

}  // namespace hfsplit
