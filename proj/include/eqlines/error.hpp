#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eqlines {

enum class ErrorKind {
  OutOfRange,
  SelfLoop,
  DuplicateEdge,
  BadParams,
  NoSuchEdge,
  Disconnected,
  ParseError,
  ConvergenceFailure,
  OutOfDomain,
  RankDeficient,
  PreconditionViolated,
  TheoremViolation,
  NotEdgeDisjoint,
  NotCertified,
  SeedMismatch,
  DimensionMismatch,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NoSuchEdge: return "NoSuchEdge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::NotEdgeDisjoint: return "NotEdgeDisjoint";
    case ErrorKind::NotCertified: return "NotCertified";
    case ErrorKind::SeedMismatch: return "SeedMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this type; `kind()`
/// tells callers which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed graph input. `offset()` is the byte position of the offending
/// character in the input buffer.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& reason)
      : Error(ErrorKind::ParseError, "at byte " + std::to_string(offset) + ": " + reason),
        offset_(offset),
        reason_(reason) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t offset_;
  std::string reason_;
};

}  // namespace eqlines
