#pragma once

#include <stdexcept>
#include <string>

namespace urkit {

// Base class for all library errors. Subclasses exist so callers can map
// error categories to exit codes or recover selectively.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define URKIT_ERROR_CLASS(Name)       \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

URKIT_ERROR_CLASS(DimensionMismatch);
URKIT_ERROR_CLASS(NotSquare);
URKIT_ERROR_CLASS(NotHermitian);
URKIT_ERROR_CLASS(ZeroVector);
URKIT_ERROR_CLASS(InvalidSpin);
URKIT_ERROR_CLASS(InvalidCutoff);
URKIT_ERROR_CLASS(InvalidSpec);
URKIT_ERROR_CLASS(InvalidState);
URKIT_ERROR_CLASS(NumericalInconsistency);
URKIT_ERROR_CLASS(DegenerateInformationOperator);
URKIT_ERROR_CLASS(NotOrthogonal);
URKIT_ERROR_CLASS(EmptyBasis);
URKIT_ERROR_CLASS(IndexOutOfRange);
URKIT_ERROR_CLASS(InvalidParameters);
URKIT_ERROR_CLASS(FileNotFound);
URKIT_ERROR_CLASS(ParseError);

#undef URKIT_ERROR_CLASS

}  // namespace urkit
