#pragma once

#include <stdexcept>
#include <string>

namespace sqfb {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SQFB_DECLARE_ERROR(Name)            \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

SQFB_DECLARE_ERROR(NotSquarefree);
SQFB_DECLARE_ERROR(NotCoprime);
SQFB_DECLARE_ERROR(InvalidTriple);
SQFB_DECLARE_ERROR(OrderMismatch);
SQFB_DECLARE_ERROR(OwnerMismatch);
SQFB_DECLARE_ERROR(CongruenceFails);
SQFB_DECLARE_ERROR(GammaNotDividing);
SQFB_DECLARE_ERROR(ShapeError);
SQFB_DECLARE_ERROR(BoundExceeded);
SQFB_DECLARE_ERROR(NotAGroup);
SQFB_DECLARE_ERROR(NotRegular);
SQFB_DECLARE_ERROR(NonIntegral);

#undef SQFB_DECLARE_ERROR

}  // namespace sqfb
