#pragma once

#include <stdexcept>
#include <string>

namespace isolab {

// Base for every error the library raises on bad input or out-of-window
// queries. Report-style operations never throw on axiom failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ISOLAB_ERROR(name)            \
  class name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

ISOLAB_ERROR(UnknownLabel);
ISOLAB_ERROR(InvalidAlphabet);
ISOLAB_ERROR(WindowExceeded);
ISOLAB_ERROR(NoInverse);
ISOLAB_ERROR(EmptyLabelSet);
ISOLAB_ERROR(EmptyProduct);
ISOLAB_ERROR(LoadError);
ISOLAB_ERROR(ClosureViolation);
ISOLAB_ERROR(EmptyNegativePart);
ISOLAB_ERROR(NotAMonoid);
ISOLAB_ERROR(NotAGroup);
ISOLAB_ERROR(AlphabetOverlap);
ISOLAB_ERROR(SignMismatch);
ISOLAB_ERROR(RegularityViolation);
ISOLAB_ERROR(MissingProduct);
ISOLAB_ERROR(StructureError);
ISOLAB_ERROR(EmptyWindow);
ISOLAB_ERROR(IdentityMissing);
ISOLAB_ERROR(BadParams);
ISOLAB_ERROR(AlphabetMismatch);

#undef ISOLAB_ERROR

}  // namespace isolab
