#pragma once

#include <stdexcept>
#include <string>

namespace homlr {

// Error taxonomy mirrors the CLI exit statuses: InputError -> exit 2,
// MathError -> exit 1, InternalError -> a bug in this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};

struct MathError : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

#define HOMLR_ERROR(NAME, BASE)                                                \
    struct NAME : BASE {                                                       \
        explicit NAME(const std::string& msg) : BASE(#NAME ": " + msg) {}      \
    }

HOMLR_ERROR(ParseError, InputError);
HOMLR_ERROR(SchemaError, InputError);
HOMLR_ERROR(DimensionMismatch, InputError);
HOMLR_ERROR(InvalidDegree, InputError);
HOMLR_ERROR(EliminationCapExceeded, InputError);

HOMLR_ERROR(SubspaceNotContained, MathError);
HOMLR_ERROR(NotLieEndomorphism, MathError);
HOMLR_ERROR(AlphaNotInvertible, MathError);
HOMLR_ERROR(PhiNotInvertible, MathError);
HOMLR_ERROR(NotLREndomorphism, MathError);
HOMLR_ERROR(NotRepresentationByDerivations, MathError);
HOMLR_ERROR(AlgebraMismatch, MathError);
HOMLR_ERROR(NotACochain, MathError);
HOMLR_ERROR(NotACocycle, MathError);
HOMLR_ERROR(NoSection, MathError);
HOMLR_ERROR(SectionInvalid, MathError);
HOMLR_ERROR(NotExtensionAutomorphism, MathError);
HOMLR_ERROR(ActionInvalid, MathError);
HOMLR_ERROR(NotFreeModule, MathError);
HOMLR_ERROR(AxiomFailure, MathError);
HOMLR_ERROR(ModuleAxiomFailure, MathError);
HOMLR_ERROR(NotPhiDerivation, MathError);
HOMLR_ERROR(PoissonAxiomFailure, MathError);

// "Should be impossible" cases for valid inputs; reaching one signals an
// inconsistent structure slipped past a precondition.
HOMLR_ERROR(ImageNotInCochainSpace, InternalError);
HOMLR_ERROR(NoSolution, InternalError);
HOMLR_ERROR(ClosureFailure, InternalError);

#undef HOMLR_ERROR

} // namespace homlr
