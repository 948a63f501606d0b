#pragma once

#include <stdexcept>
#include <string>

namespace lpc {

/// Coarse error class, used by the C API to map exceptions onto status codes.
enum class ErrorCategory {
  Usage,    ///< bad arguments: unknown names, out-of-range params, case mismatch
  Numeric,  ///< data fails a numerical precondition or degenerates mid-pipeline
  Io,       ///< filesystem failure
};

class Error : public std::runtime_error {
public:
  Error(ErrorCategory cat, std::string msg) : std::runtime_error(std::move(msg)), cat_(cat) {}
  ErrorCategory category() const noexcept { return cat_; }

private:
  ErrorCategory cat_;
};

#define LPC_DEFINE_ERROR(NAME, CATEGORY)                                     \
  class NAME : public Error {                                                \
  public:                                                                    \
    explicit NAME(const std::string& msg) : Error(ErrorCategory::CATEGORY, msg) {} \
  }

LPC_DEFINE_ERROR(NullVectorError, Numeric);
LPC_DEFINE_ERROR(LightlikeTangentError, Numeric);
LPC_DEFINE_ERROR(LightlikeNormalError, Numeric);
LPC_DEFINE_ERROR(FrameUndefinedError, Numeric);
LPC_DEFINE_ERROR(MixedTypeError, Numeric);
LPC_DEFINE_ERROR(NonMonotoneError, Numeric);
LPC_DEFINE_ERROR(GridTooSmallError, Usage);
LPC_DEFINE_ERROR(GridMismatchError, Usage);
LPC_DEFINE_ERROR(NonUnitFieldError, Numeric);
LPC_DEFINE_ERROR(CaseMismatchError, Usage);
LPC_DEFINE_ERROR(DegenerateKappaBarError, Numeric);
LPC_DEFINE_ERROR(RadicandNegativeError, Numeric);
LPC_DEFINE_ERROR(NoApplicableVariantError, Numeric);
LPC_DEFINE_ERROR(UnknownCurveError, Usage);
LPC_DEFINE_ERROR(ParamOutOfRangeError, Usage);
LPC_DEFINE_ERROR(InvalidArgumentError, Usage);
LPC_DEFINE_ERROR(IoError, Io);

#undef LPC_DEFINE_ERROR

}  // namespace lpc
