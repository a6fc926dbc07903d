#pragma once

#include <stdexcept>
#include <string>

namespace frobcy {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define FROBCY_ERROR(Name)                                   \
    struct Name : Error {                                    \
        explicit Name(const std::string& what) : Error(what) {} \
    }

FROBCY_ERROR(NotAUnit);
FROBCY_ERROR(PrecisionExhausted);
FROBCY_ERROR(DivisionByZero);
FROBCY_ERROR(DimensionMismatch);
FROBCY_ERROR(ZeroSymbol);
FROBCY_ERROR(NonIntegralSolution);
FROBCY_ERROR(UnexpectedOrder);
FROBCY_ERROR(NotRationalY);
FROBCY_ERROR(LengthMismatch);
FROBCY_ERROR(NonIntegral);
FROBCY_ERROR(OutsideUnitDisk);
FROBCY_ERROR(LiftOutOfBound);
FROBCY_ERROR(SingularFiber);
FROBCY_ERROR(NoFixture);
FROBCY_ERROR(CorruptCache);
FROBCY_ERROR(BadInput);

#undef FROBCY_ERROR

}  // namespace frobcy
