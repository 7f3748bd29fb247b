#pragma once

#include <stdexcept>
#include <string>

namespace fpg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FPG_ERROR(Name)                       \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(std::string const& what)    \
        : Error(std::string(#Name ": ") + what) {} \
  }

FPG_ERROR(AlphabetMismatch);
FPG_ERROR(UnknownGenerator);
FPG_ERROR(UnmappedGenerator);
FPG_ERROR(ParseError);
FPG_ERROR(EnumerationExceeded);
FPG_ERROR(NotInSubgroup);
FPG_ERROR(InvalidTransversal);
FPG_ERROR(NotAHomomorphism);
FPG_ERROR(OracleUnavailable);
FPG_ERROR(InfiniteAbelianization);
FPG_ERROR(UnknownGroup);
FPG_ERROR(UnknownModel);
FPG_ERROR(InvalidStrandCount);
FPG_ERROR(TooLarge);
FPG_ERROR(UnknownClaimId);

#undef FPG_ERROR

}  // namespace fpg
