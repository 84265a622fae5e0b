#pragma once

#include <stdexcept>
#include <string>

namespace agr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyGenerators : Error { using Error::Error; };
struct GcdNotOne : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct NotInRing : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };
struct NotContained : Error { using Error::Error; };
struct NotArtinian : Error { using Error::Error; };
struct NoReductionWithinBound : Error { using Error::Error; };
struct StabilizationNotReached : Error { using Error::Error; };
struct CriteriaDisagree : Error { using Error::Error; };
struct HypothesisFailure : Error { using Error::Error; };
struct HypothesisNotDetected : Error { using Error::Error; };
struct ConductorMismatch : Error { using Error::Error; };
struct NotMinimalGenerators : Error { using Error::Error; };
struct InconclusiveAtBound : Error { using Error::Error; };
struct InfiniteLength : Error { using Error::Error; };
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int ln, int col)
        : Error("parse error at " + std::to_string(ln) + ":" + std::to_string(col) + ": " + msg),
          line(ln), column(col) {}
};
struct UnknownName : Error { using Error::Error; };
struct CorpusMismatch : Error { using Error::Error; };

}  // namespace agr
