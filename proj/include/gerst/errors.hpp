#pragma once

#include <stdexcept>
#include <string>

namespace gerst {

enum class ErrorCode {
  FieldMismatch,
  DimensionMismatch,
  NotASubspace,
  InvalidAlgebra,
  NonAdmissible,
  NotFinite,
  NotAGroup,
  NoRootOfUnity,
  Unsupported,
  IndexError,
  DegreeOutOfRange,
  Parse,
  Usage,
  Resource,
  VerificationFailed,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported through this exception; the code is what
// the C API maps onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gerst
