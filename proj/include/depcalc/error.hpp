#pragma once

#include <stdexcept>
#include <string>

namespace depcalc {

// Base of every error the library throws on bad input. The CLI maps these to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DEPCALC_DEFINE_ERROR(Name) \
  class Name : public Error {      \
   public:                         \
    using Error::Error;            \
  }

DEPCALC_DEFINE_ERROR(CycleError);
DEPCALC_DEFINE_ERROR(IndexError);
DEPCALC_DEFINE_ERROR(ArityError);
DEPCALC_DEFINE_ERROR(SizeError);
DEPCALC_DEFINE_ERROR(SizeMismatch);
DEPCALC_DEFINE_ERROR(PreconditionError);
DEPCALC_DEFINE_ERROR(MalformedExpression);
DEPCALC_DEFINE_ERROR(ParseError);
DEPCALC_DEFINE_ERROR(InvalidExtension);
DEPCALC_DEFINE_ERROR(InvalidDiagram);
DEPCALC_DEFINE_ERROR(InvalidPaths);
DEPCALC_DEFINE_ERROR(MissingAssignment);

#undef DEPCALC_DEFINE_ERROR

}  // namespace depcalc
