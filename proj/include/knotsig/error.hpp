#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotsig {

enum class ErrorCode {
  FieldMismatch,
  NonSquare,
  ZeroPolynomial,
  OddDimension,
  NotUnimodularSkew,
  NotReciprocal,
  OutOfFamily,
  NotOddPretzel,
  UnsupportedFamily,
  OutOfRange,
  Parse,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::NotUnimodularSkew: return "NotUnimodularSkew";
    case ErrorCode::NotReciprocal: return "NotReciprocal";
    case ErrorCode::OutOfFamily: return "OutOfFamily";
    case ErrorCode::NotOddPretzel: return "NotOddPretzel";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so diagnostics are greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace knotsig
