#pragma once

#include <cstdint>
#include <string>

#include "orientdom/checks.hpp"
#include "orientdom/constructions.hpp"
#include "orientdom/optimizer.hpp"

namespace orientdom {

struct RunConfig {
    int workers = 0; // 0 = available parallelism
    int edge_cap = 30;
    long long node_budget = 10'000'000;
    enum class Format { Json, Text, Dot } format = Format::Json;
    uint64_t seed = 0;
    std::string output_dir;
    bool timing = true; // false pins elapsedMs to 0 for byte-stable output
};

OptimizeOptions optimize_options(const RunConfig& cfg);
CheckBudget check_budget(const RunConfig& cfg);

/// JSON schema v1: {schemaVersion, quantity, value, exact,
/// witness:{graph6, dirBits, tdSet}, stats:{nodes, pruned, elapsedMs},
/// paperAnchor}. The text format is a fixed-width two-column table; DOT
/// renders the witness with its set highlighted.
std::string emit_extremum_report(const ExtremumReport& r, const RunConfig& cfg);
std::string emit_solve_report(const Orientation& o, const std::string& quantity,
                              const SolveResult& r, const RunConfig& cfg);
std::string emit_spectrum_report(const Graph& g, const Spectrum& sp, const RunConfig& cfg);
std::string emit_construction_report(const std::string& name, const ConstructionResult& c,
                                     const RunConfig& cfg);
std::string emit_check_outcome(const CheckOutcome& oc, const RunConfig& cfg); // one JSON line
std::string emit_scan_summary(const ScanSummary& s, const RunConfig& cfg);

std::string dir_bits_string(const std::vector<uint8_t>& dir);
std::vector<uint8_t> parse_dir_bits(const std::string& bits);

} // namespace orientdom
