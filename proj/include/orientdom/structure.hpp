#pragma once

#include <optional>
#include <vector>

#include "orientdom/graph.hpp"

namespace orientdom {

struct StructuralProfile {
    std::vector<std::vector<int>> components;
    std::vector<int> leaves;               // vertices of degree 1
    std::optional<int> girth;              // nullopt on forests
    int longest_induced_cycle = 0;         // 0 when acyclic or not found
    std::vector<int> longest_induced_cycle_vertices; // in cycle order
    bool induced_cycle_budget_exceeded = false;
    bool is_unicyclic = false;
    int max_degree = 0;
    std::vector<int> degree3_vertices;
};

/// Girth by BFS from every vertex; longest induced cycle by exhaustive
/// enumeration of induced paths, bounded by `node_budget` search nodes.
/// When the budget runs out the rest of the profile is still exact and the
/// induced-cycle fields keep the best value seen.
StructuralProfile structural_profile(const Graph& g, long long node_budget = 10'000'000);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

} // namespace orientdom
