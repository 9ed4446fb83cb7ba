#pragma once

#include <stdexcept>
#include <string>

namespace fullab {

enum class ErrorCode {
  NotSymmetric,
  NotSphere,
  NonTriangleFace,
  BadDegreeProfile,
  N22Forbidden,
  InfeasibleN,
  GluingFailed,
  PatchAmbiguous,
  NoSpiralExists,
  MultiEdge,
  DegreeUnderflow,
  InvalidPath,
  WindupFailed,
  DegreeOverflow,
  SpiralStuck,
  NoValidPath,
  OutOfRange,
  BudgetExceeded,
  NotFound,
  BadHeader,
  TruncatedRecord,
  ValidationFailed,
  EmptyInput,
};

const char* error_code_name(ErrorCode c);

// All throwing entry points use this one type; hot inner loops (spiral wind/unwind)
// return status enums instead and never allocate.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fullab
