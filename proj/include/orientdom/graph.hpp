#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orientdom/error.hpp"

namespace orientdom {

/// Simple undirected graph. Vertices are 0..n-1; edges are stored with
/// u < v in strictly increasing lexicographic order, so two equal graphs
/// compare equal field by field. Immutable after construction.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    /// Index of edge {u,v} in the canonical edge order, or -1.
    int edge_index(int u, int v) const;

    /// Adjacency row as a bit mask; only available when n <= 64.
    uint64_t neighbor_mask(int v) const { return adj_mask_[v]; }
    bool has_masks() const { return !adj_mask_.empty(); }

    friend Graph build_graph(int n, std::vector<std::pair<int, int>> edges);

    bool operator==(const Graph& other) const {
        return n == other.n && edges == other.edges;
    }

private:
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> adj_mask_;
};

/// Canonicalizes and validates an edge list. Rejects self-loops,
/// duplicates (in either order) and endpoints outside 0..n-1.
Graph build_graph(int n, std::vector<std::pair<int, int>> edges);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// True iff the component containing any vertex of `within` has a cycle.
/// With empty `within`, true iff the whole graph has a cycle.
bool has_cycle(const Graph& g);

/// Every component contains a cycle, i.e. a valid orientation exists.
/// On failure `tree_witness` (if given) receives a vertex of a tree component.
bool every_component_cyclic(const Graph& g, int* tree_witness = nullptr);

Graph remove_vertex(const Graph& g, int v);
Graph remove_edge(const Graph& g, int u, int v);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Human-readable label such as "n=5 m=6" plus the graph6 code.
std::string describe(const Graph& g);

} // namespace orientdom
