#pragma once

#include <stdexcept>
#include <string>

namespace zt {

enum class Errc {
  InvalidArgument,
  IndexOutOfRange,
  DuplicateEntry,
  DimensionMismatch,
  PositiveOffDiagonal,
  NegativeDiagonal,
  InvalidDecomposition,
  InvalidSubset,
  GuardExceeded,
  NotNonnegative,
  NotWeaklyIrreducible,
  MaxItersExceeded,
  NoEigenpairFound,
  NotZTensor,
  ZeroScaling,
  DegeneratePolynomial,
  RetriesExhausted,
  UnknownTheorem,
  ParseError,
  IoError,
};

constexpr const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DuplicateEntry: return "DuplicateEntry";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case Errc::NegativeDiagonal: return "NegativeDiagonal";
    case Errc::InvalidDecomposition: return "InvalidDecomposition";
    case Errc::InvalidSubset: return "InvalidSubset";
    case Errc::GuardExceeded: return "GuardExceeded";
    case Errc::NotNonnegative: return "NotNonnegative";
    case Errc::NotWeaklyIrreducible: return "NotWeaklyIrreducible";
    case Errc::MaxItersExceeded: return "MaxItersExceeded";
    case Errc::NoEigenpairFound: return "NoEigenpairFound";
    case Errc::NotZTensor: return "NotZTensor";
    case Errc::ZeroScaling: return "ZeroScaling";
    case Errc::DegeneratePolynomial: return "DegeneratePolynomial";
    case Errc::RetriesExhausted: return "RetriesExhausted";
    case Errc::UnknownTheorem: return "UnknownTheorem";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

/// Library-wide exception type carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace zt
