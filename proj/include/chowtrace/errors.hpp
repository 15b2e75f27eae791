#pragma once

#include <stdexcept>
#include <string>

namespace chowtrace {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define CHOWTRACE_DEFINE_ERROR(Name)          \
    struct Name : Error {                     \
        using Error::Error;                   \
    }

// exactalg
CHOWTRACE_DEFINE_ERROR(AlgebraMismatch);
CHOWTRACE_DEFINE_ERROR(ModulusMismatch);
CHOWTRACE_DEFINE_ERROR(DomainMismatch);
CHOWTRACE_DEFINE_ERROR(NotAUnit);

// rootweyl
CHOWTRACE_DEFINE_ERROR(UnknownType);
CHOWTRACE_DEFINE_ERROR(BoundExceeded);

// schubert
CHOWTRACE_DEFINE_ERROR(DivisionFailure);
CHOWTRACE_DEFINE_ERROR(IntegralityFailure);
CHOWTRACE_DEFINE_ERROR(NotInPullbackImage);

// charclass / catalog
CHOWTRACE_DEFINE_ERROR(DimensionUnderflow);
CHOWTRACE_DEFINE_ERROR(UnknownVariety);
CHOWTRACE_DEFINE_ERROR(UnsupportedCombination);

// rostnum
CHOWTRACE_DEFINE_ERROR(UnsupportedShape);
CHOWTRACE_DEFINE_ERROR(NotDivisibleByP);
CHOWTRACE_DEFINE_ERROR(DimensionNotDivisible);
CHOWTRACE_DEFINE_ERROR(PathDisagreement);

// steenrod
CHOWTRACE_DEFINE_ERROR(NotInGeneratedSubring);
CHOWTRACE_DEFINE_ERROR(UnsolvableSteenrod);
CHOWTRACE_DEFINE_ERROR(SearchBoundExceeded);

// cli / file format
CHOWTRACE_DEFINE_ERROR(SpecParseError);

#undef CHOWTRACE_DEFINE_ERROR

} // namespace chowtrace
