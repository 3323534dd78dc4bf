#pragma once

#include <stdexcept>
#include <string>

namespace tsurf {

// Input that violates a documented precondition. The CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define TSURF_ERROR(Name)                                                      \
  class Name : public ValidationError {                                        \
  public:                                                                      \
    explicit Name(const std::string &what) : ValidationError(#Name ": " + what) {} \
  }

TSURF_ERROR(NotTransitive);
TSURF_ERROR(SumMismatch);
TSURF_ERROR(NegativeLength);
TSURF_ERROR(ShapeMismatch);
TSURF_ERROR(ZeroNodeValue);
TSURF_ERROR(UnsupportedLength);
TSURF_ERROR(LengthMismatch);
TSURF_ERROR(CaseMismatch);
TSURF_ERROR(NotAStabilizer);
TSURF_ERROR(HypothesisFailed);
TSURF_ERROR(GenusMismatch);

#undef TSURF_ERROR

} // namespace tsurf
