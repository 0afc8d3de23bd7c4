#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace fuchsian {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// coincident or otherwise unusable geometric input
struct DegenerateInput : Error { using Error::Error; };

// the chosen base point is (numerically) fixed by a non-identity element
struct FixedBasePoint : Error { using Error::Error; };

// the orbit truncation at depth d and d+1 produced different polygons
struct UnstableTruncation : Error { using Error::Error; };

// an edge's image under its label's inverse matches no other edge
struct PairingFailure : Error { using Error::Error; };

// a geodesic passes too close to a tessellation vertex to be coded
struct NonGeneric : Error {
    NonGeneric(const std::string& msg, double px, double py)
        : Error(msg), x(px), y(py) {}
    double x = 0, y = 0; // offending vertex (euclidean disk coords)
};

struct OnBoundary : Error { using Error::Error; };
struct NonTerminating : Error { using Error::Error; };
struct SamplingExhausted : Error { using Error::Error; };
struct NotIdeal : Error { using Error::Error; };
struct NoFiniteVertices : Error { using Error::Error; };
struct NestingViolation : Error { using Error::Error; };
struct BudgetExhausted : Error { using Error::Error; };

struct ConstructionFailed : Error {
    ConstructionFailed(const std::string& stage_, const std::string& msg)
        : Error(stage_ + ": " + msg), stage(stage_) {}
    std::string stage;
};

} // namespace fuchsian
