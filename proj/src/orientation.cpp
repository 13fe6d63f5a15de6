#include "orientdom/orientation.hpp"

#include <algorithm>

namespace orientdom {

Orientation orient(Graph g, std::vector<uint8_t> dir) {
    if (dir.size() != g.edges.size())
        fail(ErrorCode::DirLengthMismatch, std::to_string(dir.size()) + " direction bits for " +
                                               std::to_string(g.edges.size()) + " edges");
    Orientation o;
    o.base = std::move(g);
    o.dir = std::move(dir);
    int n = o.base.n;
    o.out_.assign(n, {});
    o.in_.assign(n, {});
    for (size_t e = 0; e < o.base.edges.size(); ++e) {
        auto [from, to] = o.arc(static_cast<int>(e));
        o.out_[from].push_back(to);
        o.in_[to].push_back(from);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(o.out_[v].begin(), o.out_[v].end());
        std::sort(o.in_[v].begin(), o.in_[v].end());
    }
    if (n <= 64) {
        o.out_mask_.assign(n, 0);
        o.in_mask_.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            for (int w : o.out_[v]) o.out_mask_[v] |= uint64_t{1} << w;
            for (int w : o.in_[v]) o.in_mask_[v] |= uint64_t{1} << w;
        }
    }
    return o;
}

Orientation orient_by_arcs(Graph g, std::span<const std::pair<int, int>> arcs) {
    std::vector<uint8_t> dir(g.edges.size(), 2);
    for (auto [from, to] : arcs) {
        int e = g.edge_index(from, to);
        if (e < 0)
            fail(ErrorCode::InvalidEdge,
                 "arc (" + std::to_string(from) + "," + std::to_string(to) + ") is not over an edge");
        uint8_t bit = from < to ? 0 : 1;
        if (dir[e] != 2 && dir[e] != bit)
            fail(ErrorCode::InvalidEdge, "edge oriented both ways: (" + std::to_string(from) + "," +
                                             std::to_string(to) + ")");
        dir[e] = bit;
    }
    for (size_t e = 0; e < dir.size(); ++e)
        if (dir[e] == 2)
            fail(ErrorCode::DirLengthMismatch,
                 "edge (" + std::to_string(g.edges[e].first) + "," + std::to_string(g.edges[e].second) +
                     ") left unoriented");
    return orient(std::move(g), std::move(dir));
}

bool Orientation::has_arc(int from, int to) const {
    if (has_masks()) return (out_mask_[from] >> to) & 1u;
    const auto& row = out_[from];
    return std::binary_search(row.begin(), row.end(), to);
}

bool is_valid(const Orientation& o) { return zero_in_degree_vertex(o) == -1; }

int zero_in_degree_vertex(const Orientation& o) {
    for (int v = 0; v < o.base.n; ++v)
        if (o.in_degree(v) == 0) return v;
    return -1;
}

std::string to_dot(const Orientation& o, std::span<const int> highlight) {
    std::vector<char> gray(o.base.n, 0);
    for (int v : highlight) gray[v] = 1;
    std::string out = "digraph orientation {\n  node [shape=circle];\n";
    for (int v = 0; v < o.base.n; ++v) {
        out += "  " + std::to_string(v);
        if (gray[v]) out += " [style=filled fillcolor=gray]";
        out += ";\n";
    }
    for (size_t e = 0; e < o.base.edges.size(); ++e) {
        auto [from, to] = o.arc(static_cast<int>(e));
        out += "  " + std::to_string(from) + " -> " + std::to_string(to) + ";\n";
    }
    out += "}\n";
    return out;
}

} // namespace orientdom
