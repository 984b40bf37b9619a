#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coclass {

/// Base class of every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

#define COCLASS_DEFINE_ERROR(Name)   \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  };

// abelian invariants
COCLASS_DEFINE_ERROR(NonRealizableCounts)
// group engine
COCLASS_DEFINE_ERROR(InvalidPresentation)
COCLASS_DEFINE_ERROR(EnumerationOverflow)
COCLASS_DEFINE_ERROR(WrongAbelianization)
// artin pattern
COCLASS_DEFINE_ERROR(NotIndexThree)
COCLASS_DEFINE_ERROR(DerivedNotContained)
// catalog
COCLASS_DEFINE_ERROR(UnknownId)
COCLASS_DEFINE_ERROR(UnsupportedParams)
COCLASS_DEFINE_ERROR(CatalogFormatError)
// coclass rules
COCLASS_DEFINE_ERROR(InconsistentPattern)
COCLASS_DEFINE_ERROR(OutsideRegularRange)
COCLASS_DEFINE_ERROR(MissingTree)
COCLASS_DEFINE_ERROR(NotExceptional)
COCLASS_DEFINE_ERROR(IrregularNotPossible)
// normal lattice
COCLASS_DEFINE_ERROR(UnsupportedShape)
COCLASS_DEFINE_ERROR(PreconditionDefect)
// field data
COCLASS_DEFINE_ERROR(UnsupportedFamily)
COCLASS_DEFINE_ERROR(RecordError)

#undef COCLASS_DEFINE_ERROR

}  // namespace coclass
