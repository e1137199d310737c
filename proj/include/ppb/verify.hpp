#pragma once

#include <map>
#include <string>
#include <vector>

#include "ppb/eigen.hpp"

namespace ppb {
namespace verify {

// One verification entry: a named identity, its measured residual, the
// tolerance it must stay under, and the verdict.
struct CheckEntry {
    std::string name;   // e.g. "polys.ode_residual.plus"
    std::string detail; // identity under test, in math terms
    double residual;
    double tolerance;
    bool pass;
};

struct Report {
    BarrierParams params;
    std::vector<CheckEntry> entries;
    std::size_t passed() const;
    std::size_t failed() const;
    bool all_pass() const { return failed() == 0; }
};

struct Options {
    // Per-check tolerance scale factors keyed by entry name ("" scales all).
    std::map<std::string, double> tolerance_scale;
    double scale_for(const std::string& name) const;
};

// Suite selector bitmask.
enum Suite : unsigned {
    kPolys = 1u << 0,
    kQuad = 1u << 1,
    kEigen = 1u << 2,
    kDynamics = 1u << 3,
    kSpectra = 1u << 4,
    kAll = kPolys | kQuad | kEigen | kDynamics | kSpectra,
};
// Parse "polys" / "quad" / "eigen" / "dynamics" / "spectra" / "all";
// throws std::invalid_argument on anything else.
unsigned parse_suite(const std::string& name);

// Run every machine-checkable identity of the selected suites at the given
// parameters. Deterministic: same inputs give identical reports.
Report emit_verification(const BarrierParams& params, unsigned suites = kAll,
                         const Options& options = {});

// Serializations. JSON is byte-stable across runs (ordered keys, shortest
// round-trip number formatting).
std::string to_json(const Report& report);
std::string to_text(const Report& report);

} // namespace verify
} // namespace ppb
