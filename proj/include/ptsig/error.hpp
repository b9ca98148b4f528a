#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptsig {

enum class ErrorKind {
  NonFinite,
  NotHermitian,
  NotPositiveDefinite,
  InvalidState,
  BrokenPTPhase,
  DegenerateScale,
  AtBranchPoint,
  OutOfRange,
  ZeroNorm,
  ConfigError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFinite: return "non-finite input";
    case ErrorKind::NotHermitian: return "matrix not Hermitian";
    case ErrorKind::NotPositiveDefinite: return "matrix not positive definite";
    case ErrorKind::InvalidState: return "invalid density matrix";
    case ErrorKind::BrokenPTPhase: return "broken PT phase";
    case ErrorKind::DegenerateScale: return "degenerate scale (t = 0, s != 0)";
    case ErrorKind::AtBranchPoint: return "at branch point";
    case ErrorKind::OutOfRange: return "parameter out of range";
    case ErrorKind::ZeroNorm: return "zero norm after local operation";
    case ErrorKind::ConfigError: return "configuration error";
  }
  return "unknown error";
}

/// Every failure raised by the library carries one of the ErrorKind tags.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ptsig
