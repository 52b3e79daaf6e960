#pragma once

#include <stdexcept>
#include <string>

namespace pgraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define PGRAPH_ERROR(Name)                                   \
    struct Name : Error {                                    \
        explicit Name(const std::string& m = #Name) : Error(m) {} \
    }

PGRAPH_ERROR(InvalidSlope);
PGRAPH_ERROR(NotAnEdge);
PGRAPH_ERROR(NoSuchAssociation);
PGRAPH_ERROR(Unsupported);
PGRAPH_ERROR(ShapeError);
PGRAPH_ERROR(NotConnected);
PGRAPH_ERROR(UnknownGenerator);
PGRAPH_ERROR(UnknownCurve);
PGRAPH_ERROR(NotAPantsDecomposition);
PGRAPH_ERROR(CurveNotInDecomposition);
PGRAPH_ERROR(NotAPath);
PGRAPH_ERROR(TooLong);
PGRAPH_ERROR(NotAlternating);
PGRAPH_ERROR(NotAPentagon);
PGRAPH_ERROR(NotAHexagon);
PGRAPH_ERROR(IllegalMove);
PGRAPH_ERROR(NotIllegal);
PGRAPH_ERROR(NotCertified);

#undef PGRAPH_ERROR

}  // namespace pgraph
