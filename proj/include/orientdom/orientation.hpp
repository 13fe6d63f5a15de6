#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orientdom/graph.hpp"

namespace orientdom {

/// An orientation of a base graph: one direction bit per edge in canonical
/// edge order, 0 meaning u->v (with u < v) and 1 meaning v->u. In- and
/// out-neighborhoods are materialized at construction.
struct Orientation {
    Graph base;
    std::vector<uint8_t> dir;

    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

    /// Bit rows over vertices; only populated when base.n <= 64.
    uint64_t out_mask(int v) const { return out_mask_[v]; }
    uint64_t in_mask(int v) const { return in_mask_[v]; }
    bool has_masks() const { return !out_mask_.empty(); }

    bool has_arc(int from, int to) const;

    std::pair<int, int> arc(int edge_idx) const {
        auto [u, v] = base.edges[edge_idx];
        return dir[edge_idx] ? std::make_pair(v, u) : std::make_pair(u, v);
    }

    friend Orientation orient(Graph g, std::vector<uint8_t> dir);

private:
    std::vector<std::vector<int>> out_, in_;
    std::vector<uint64_t> out_mask_, in_mask_;
};

Orientation orient(Graph g, std::vector<uint8_t> dir);

/// Convenience: builds the orientation of `g` whose arcs are exactly `arcs`
/// (each edge of g must appear in exactly one direction).
Orientation orient_by_arcs(Graph g, std::span<const std::pair<int, int>> arcs);

/// True iff every vertex has in-degree >= 1 (γ_t is defined).
bool is_valid(const Orientation& o);

/// A vertex of in-degree 0, or -1 when the orientation is valid.
int zero_in_degree_vertex(const Orientation& o);

/// GraphViz rendering; vertices in `highlight` are filled gray, mirroring
/// the figures produced by `construct`.
std::string to_dot(const Orientation& o, std::span<const int> highlight = {});

} // namespace orientdom
