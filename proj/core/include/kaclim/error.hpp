#ifndef KACLIM_ERROR_HPP
#define KACLIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kaclim {

enum class ErrorCode {
  NotSquare,
  DiagonalNotTwo,
  PositiveOffDiagonal,
  ZeroAsymmetry,
  NotSpherical,
  NotEssentially2Spherical,
  NotCnPoset,
  NotAReflection,
  AmbientMismatch,
  DegreeCapExceeded,
  TableInapplicable,
  DegreeNotCovered,
  SizeCapExceeded,
  BadInput,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DiagonalNotTwo: return "DiagonalNotTwo";
    case ErrorCode::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorCode::ZeroAsymmetry: return "ZeroAsymmetry";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::NotEssentially2Spherical: return "NotEssentially2Spherical";
    case ErrorCode::NotCnPoset: return "NotCnPoset";
    case ErrorCode::NotAReflection: return "NotAReflection";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::TableInapplicable: return "TableInapplicable";
    case ErrorCode::DegreeNotCovered: return "DegreeNotCovered";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace kaclim

#endif
