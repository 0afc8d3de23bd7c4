#pragma once

namespace fuchsian {

// Single ledger of numeric tolerances. All geometric predicates reference
// these by name; the CLI may override them once at startup before any
// computation runs.
struct Tolerances {
    double on = 1e-9;        // incidence: |sinh(signed distance)| below this is "on"
    double geodesic = 1e-8;  // degeneracy floor for endpoint separation
    double boundary = 1e-12; // strict interior margin of the unit disk
    double vertex = 1e-7;    // vertex merge radius / finite-vs-infinite split
};

Tolerances& tolerances();

} // namespace fuchsian
