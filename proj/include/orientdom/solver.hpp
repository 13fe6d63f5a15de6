#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orientdom/orientation.hpp"

namespace orientdom {

/// A replayable witness for a domination value: the set itself plus, for
/// each vertex, the chosen dominator in the set. For the total variant every
/// vertex (members included) has a dominator with a real arc; for the plain
/// variant a member without an in-arc from the set points at itself.
struct TDCertificate {
    std::vector<int> set;          // sorted ascending
    std::vector<int> dominator_of; // size n
};

struct SolveStats {
    long long nodes_explored = 0;
    long long forced_vertices = 0;
    double elapsed_seconds = 0.0;
};

struct SolveResult {
    int value = 0;
    TDCertificate cert;
    SolveStats stats;
};

/// Exact minimum total dominating set of a digraph, as a minimum set cover
/// of V by open out-neighborhoods. Requires a valid orientation.
/// The certificate is the lexicographically smallest optimal set.
SolveResult gamma_t(const Orientation& o);

/// Exact minimum dominating set (closed out-neighborhoods); any orientation.
SolveResult gamma(const Orientation& o);

bool is_total_dominating(const Orientation& o, std::span<const int> s);

/// Open S-private neighborhood of v: vertices whose only in-neighbor
/// inside s is v. Requires v in s.
std::vector<int> private_neighbors(const Orientation& o, std::span<const int> s, int v);

/// Total domination number of the undirected graph (each edge usable both
/// ways); a lower bound for dom_t.
int gamma_t_undirected(const Graph& g);

/// Allocation-free exact set-cover core over 64-bit rows, reused by the
/// orientation optimizer. rows[u] is what u covers, coverers[v] who covers v.
class CoverSolver64 {
public:
    /// Exact minimum cover size if it is < cutoff, otherwise cutoff.
    int solve(int n, const uint64_t* rows, const uint64_t* coverers, int cutoff);

    /// Size of the greedy max-coverage cover, or n + 1 when infeasible.
    int greedy(int n, const uint64_t* rows) const;

    long long nodes() const { return nodes_; }

private:
    long long nodes_ = 0;
};

namespace detail {
/// Blocked-row implementations used when n > 64; exposed for cross-checking
/// against the word engine in tests.
SolveResult gamma_t_wide(const Orientation& o);
SolveResult gamma_wide(const Orientation& o);
} // namespace detail

} // namespace orientdom
