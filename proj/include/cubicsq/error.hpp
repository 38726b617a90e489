#pragma once

#include <stdexcept>
#include <string>

namespace cubicsq {

// Base of all domain errors. name() is the stable identifier the CLI prints.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept = 0;
};

#define CUBICSQ_DEFINE_ERROR(Type)                                  \
  class Type : public Error {                                       \
   public:                                                          \
    using Error::Error;                                             \
    const char* name() const noexcept override { return #Type; }    \
  }

CUBICSQ_DEFINE_ERROR(EffortExceeded);
CUBICSQ_DEFINE_ERROR(PrecisionExceeded);
CUBICSQ_DEFINE_ERROR(InvalidPoint);
CUBICSQ_DEFINE_ERROR(InvalidField);
CUBICSQ_DEFINE_ERROR(NotBinomial);
CUBICSQ_DEFINE_ERROR(FieldMismatch);
CUBICSQ_DEFINE_ERROR(AlphaIsSquare);
CUBICSQ_DEFINE_ERROR(ZeroElement);
CUBICSQ_DEFINE_ERROR(ParseError);

#undef CUBICSQ_DEFINE_ERROR

}  // namespace cubicsq
