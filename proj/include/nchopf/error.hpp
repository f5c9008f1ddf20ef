#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nchopf {

enum class ErrorKind {
  ShapeMismatch,
  BandTooLarge,
  NotHermitian,
  DegeneratePoint,
  DiracString,
  OnAxis,
  OutsideDomain,
  InvalidModel,
  GroundSingularity,
  NoSubspace,
  SingularGram,
  NotInGroup,
  QuadratureBudgetExceeded,
  CutoffBudgetExceeded,
  DegreeTooHigh,
  ZeroVector,
  NotPseudoNormalized,
  InvalidArgument,
  UnknownSuite,
  ConfigInvalid,
  IOFailure,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BandTooLarge: return "BandTooLarge";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::DegeneratePoint: return "DegeneratePoint";
    case ErrorKind::DiracString: return "DiracString";
    case ErrorKind::OnAxis: return "OnAxis";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::InvalidModel: return "InvalidModel";
    case ErrorKind::GroundSingularity: return "GroundSingularity";
    case ErrorKind::NoSubspace: return "NoSubspace";
    case ErrorKind::SingularGram: return "SingularGram";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::QuadratureBudgetExceeded: return "QuadratureBudgetExceeded";
    case ErrorKind::CutoffBudgetExceeded: return "CutoffBudgetExceeded";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotPseudoNormalized: return "NotPseudoNormalized";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::IOFailure: return "IOFailure";
  }
  return "Unknown";
}

}  // namespace nchopf
