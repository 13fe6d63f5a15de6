#include "orientdom/graph.hpp"

#include <algorithm>

#include "orientdom/graph6.hpp"

namespace orientdom {

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (has_masks()) return (adj_mask_[u] >> v) & 1u;
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges.begin());
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) fail(ErrorCode::OutOfRange, "vertex count must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u == v) fail(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(ErrorCode::OutOfRange,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") exceeds vertex range 0.." +
                     std::to_string(n - 1));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        fail(ErrorCode::DuplicateEdge,
             "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ") listed twice");

    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    if (n <= 64) {
        g.adj_mask_.assign(n, 0);
        for (auto [u, v] : g.edges) {
            g.adj_mask_[u] |= uint64_t{1} << v;
            g.adj_mask_[v] |= uint64_t{1} << u;
        }
    }
    return g;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    return connected_components(g).size() == 1;
}

bool has_cycle(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        long long inside = 0;
        for (int v : comp) inside += g.degree(v);
        // a component with |E| >= |V| is cyclic
        if (inside / 2 >= static_cast<long long>(comp.size())) return true;
    }
    return false;
}

bool every_component_cyclic(const Graph& g, int* tree_witness) {
    for (const auto& comp : connected_components(g)) {
        long long inside = 0;
        for (int v : comp) inside += g.degree(v);
        if (inside / 2 < static_cast<long long>(comp.size())) {
            if (tree_witness) *tree_witness = comp.front();
            return false;
        }
    }
    return true;
}

Graph remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) fail(ErrorCode::OutOfRange, "no vertex " + std::to_string(v));
    std::vector<std::pair<int, int>> kept;
    for (auto [a, b] : g.edges) {
        if (a == v || b == v) continue;
        kept.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return build_graph(g.n - 1, std::move(kept));
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) fail(ErrorCode::OutOfRange, "no such edge");
    if (u > v) std::swap(u, v);
    std::vector<std::pair<int, int>> kept;
    for (auto e : g.edges)
        if (e != std::make_pair(u, v)) kept.push_back(e);
    return build_graph(g.n, std::move(kept));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> index(g.n, -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.n) fail(ErrorCode::OutOfRange, "no vertex " + std::to_string(v));
        if (index[v] != -1) fail(ErrorCode::OutOfRange, "vertex repeated in induced set");
        index[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> kept;
    for (auto [a, b] : g.edges)
        if (index[a] != -1 && index[b] != -1) kept.emplace_back(index[a], index[b]);
    return build_graph(static_cast<int>(vertices.size()), std::move(kept));
}

std::string describe(const Graph& g) {
    return "n=" + std::to_string(g.n) + " m=" + std::to_string(g.edge_count()) + " " + encode_graph6(g);
}

} // namespace orientdom
