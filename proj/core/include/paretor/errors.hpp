#pragma once

#include <stdexcept>
#include <string>

namespace paretor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define PARETOR_DEFINE_ERROR(Name)                  \
    struct Name : Error {                           \
        using Error::Error;                         \
        Name() : Error(#Name) {}                    \
    }

// field
PARETOR_DEFINE_ERROR(CompositeModulus);
PARETOR_DEFINE_ERROR(ZeroInverse);

// spmat
PARETOR_DEFINE_ERROR(DimensionMismatch);
PARETOR_DEFINE_ERROR(NotTriangular);
PARETOR_DEFINE_ERROR(SingularDiagonal);
PARETOR_DEFINE_ERROR(MissingGrade);
PARETOR_DEFINE_ERROR(UnknownId);

// matroid
PARETOR_DEFINE_ERROR(UnknownElement);
PARETOR_DEFINE_ERROR(OverlapError);
PARETOR_DEFINE_ERROR(NotABasis);
PARETOR_DEFINE_ERROR(NotAFiltration);
PARETOR_DEFINE_ERROR(NotModular);

// complex
PARETOR_DEFINE_ERROR(NotAChainComplex);
PARETOR_DEFINE_ERROR(FiltrationViolation);
PARETOR_DEFINE_ERROR(InvalidDistanceMatrix);
PARETOR_DEFINE_ERROR(TooLarge);

// pareto / persist
PARETOR_DEFINE_ERROR(SingularPivotBlock);
PARETOR_DEFINE_ERROR(NonTermination);
PARETOR_DEFINE_ERROR(TransformsNotAccumulated);
PARETOR_DEFINE_ERROR(TooLargeForOracle);

// morse
PARETOR_DEFINE_ERROR(NotAMatching);
PARETOR_DEFINE_ERROR(CyclicMatching);

// cli
PARETOR_DEFINE_ERROR(RaggedInput);
PARETOR_DEFINE_ERROR(NegativeDistance);

#undef PARETOR_DEFINE_ERROR

}  // namespace paretor
