#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "orientdom/solver.hpp"

namespace orientdom {

enum class ExtremalQuantity { DomT, DOMT, DOMPlain };

const char* quantity_name(ExtremalQuantity q);

struct OptimizeOptions {
    int workers = 0;          // 0 = hardware concurrency
    int edge_cap = 30;        // raising the cap is the explicit override
    long long max_orientations = 0; // per-shard quota, 0 = unlimited
    std::optional<int> known_upper_bound; // family bound, lets DOM_t stop early
    bool early_exit = true;   // dom_t may stop at its proven lower bound
};

struct ExtremumReport {
    ExtremalQuantity quantity = ExtremalQuantity::DomT;
    int value = 0;
    bool exact = true; // false once an orientation quota truncated the search
    std::vector<uint8_t> witness_dir;
    Orientation witness;
    TDCertificate witness_cert;
    bool some_optimal_orientation_valid = false; // tracked for DOM only
    long long orientations_considered = 0;
    long long pruned_subtrees = 0;
    double elapsed_seconds = 0;
};

struct Spectrum {
    std::vector<int> values; // sorted distinct γ_t values over valid orientations
    std::map<int, std::vector<uint8_t>> witnesses; // value -> first dir bits in stream order
    bool contiguous = false;
    bool exact = true; // false once an orientation quota truncated the search
    long long orientations_considered = 0;
    long long pruned_subtrees = 0;
    double elapsed_seconds = 0;
};

/// Exact minimum of γ_t over valid orientations. Stops early once the
/// running minimum meets max(γ_t(G), girth). Requires every component of g
/// to contain a cycle.
ExtremumReport dom_t(const Graph& g, const OptimizeOptions& opts = {});

/// Exact maximum of γ_t over valid orientations; early exit only when a
/// known family upper bound is supplied.
ExtremumReport DOM_t(const Graph& g, const OptimizeOptions& opts = {});

/// Exact maximum of γ over all 2^|E| orientations (validity not required).
ExtremumReport DOM(const Graph& g, const OptimizeOptions& opts = {});

/// All values of γ_t achieved over valid orientations, with one witness per
/// value (the first in deterministic stream order).
Spectrum td_spectrum(const Graph& g, const OptimizeOptions& opts = {});

/// Streams valid orientations in deterministic order (depth-first over the
/// canonical edge order, u->v tried before v->u, with in-degree forcing).
/// The visitor returns false to stop; returns the number visited.
long long for_each_valid_orientation(const Graph& g,
                                     const std::function<bool(const Orientation&)>& visit,
                                     const OptimizeOptions& opts = {});

std::vector<Orientation> enumerate_valid_orientations(const Graph& g,
                                                      const OptimizeOptions& opts = {});

long long count_valid_orientations(const Graph& g, const OptimizeOptions& opts = {});

} // namespace orientdom
