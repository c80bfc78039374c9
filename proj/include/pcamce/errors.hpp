#pragma once

#include <stdexcept>
#include <string>

namespace pcamce {

// Base of every exception thrown by the library. Rejections during
// decryption are not exceptions; they are returned as data.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PCAMCE_DEFINE_ERROR(Name) \
  class Name : public Error {     \
   public:                        \
    using Error::Error;           \
  }

PCAMCE_DEFINE_ERROR(OverflowError);
PCAMCE_DEFINE_ERROR(LengthError);
PCAMCE_DEFINE_ERROR(DimensionError);
PCAMCE_DEFINE_ERROR(DivisionByZero);
PCAMCE_DEFINE_ERROR(NotInRingError);
PCAMCE_DEFINE_ERROR(ParameterError);
PCAMCE_DEFINE_ERROR(InfeasibleError);
PCAMCE_DEFINE_ERROR(WeightError);
PCAMCE_DEFINE_ERROR(DegenerateRandomnessError);
PCAMCE_DEFINE_ERROR(RangeError);
PCAMCE_DEFINE_ERROR(CarryRangeError);
PCAMCE_DEFINE_ERROR(FormatError);
PCAMCE_DEFINE_ERROR(IntegrityError);
PCAMCE_DEFINE_ERROR(ForbiddenQueryError);

#undef PCAMCE_DEFINE_ERROR

}  // namespace pcamce
