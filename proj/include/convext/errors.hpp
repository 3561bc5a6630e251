#pragma once

#include <stdexcept>
#include <string>

namespace convext {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// Pivot magnitude fell below the breakdown threshold with no alternative;
// the input is too ill-conditioned for the dense tableau.
struct NumericBreakdown : Error {
    explicit NumericBreakdown(const std::string& what) : Error(what) {}
};

struct NotInHull : Error {
    explicit NotInHull(const std::string& what) : Error(what) {}
};

struct EmptyDomain : Error {
    explicit EmptyDomain(const std::string& what) : Error(what) {}
};

struct NonFiniteValue : Error {
    explicit NonFiniteValue(const std::string& what) : Error(what) {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& what) : Error(what) {}
};

struct BadParams : Error {
    explicit BadParams(const std::string& what) : Error(what) {}
};

struct DegenerateBall : Error {
    explicit DegenerateBall(const std::string& what) : Error(what) {}
};

struct QueryInsideHull : Error {
    explicit QueryInsideHull(const std::string& what) : Error(what) {}
};

struct NotConvexInput : Error {
    explicit NotConvexInput(const std::string& what) : Error(what) {}
};

struct EvaluationOutsideDomain : Error {
    explicit EvaluationOutsideDomain(const std::string& what) : Error(what) {}
};

struct SupportEscapesData : Error {
    explicit SupportEscapesData(const std::string& what) : Error(what) {}
};

struct TuningFailed : Error {
    explicit TuningFailed(const std::string& what) : Error(what) {}
};

struct CoverageCheckFailed : Error {
    explicit CoverageCheckFailed(const std::string& what) : Error(what) {}
};

struct UnknownScenario : Error {
    explicit UnknownScenario(const std::string& what) : Error(what) {}
};

struct InvalidBand : Error {
    explicit InvalidBand(const std::string& what) : Error(what) {}
};

}  // namespace convext
