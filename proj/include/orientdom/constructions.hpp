#pragma once

#include <cmath>

#include "orientdom/families.hpp"
#include "orientdom/orientation.hpp"
#include "orientdom/solver.hpp"

namespace orientdom {

enum class PredictedFor { DomT, DOMT, GammaTOfWitness };
enum class PredictedRelation { Equals, AtLeast, AtMost, Between };

/// A closed-form bound attached to a family or a constructed witness.
/// Between carries both ends; the other relations use `bound` alone.
struct PredictedQuantity {
    PredictedFor quantity = PredictedFor::DomT;
    PredictedRelation relation = PredictedRelation::Equals;
    int bound = 0;
    int bound_hi = 0;
};

struct ConstructionResult {
    Orientation orientation;
    std::vector<int> candidate_set; // sorted; totally dominates the orientation
    PredictedQuantity predicted;
};

/// 4-cycle x1->y1->x2->y2->x1 with fan-out arcs; γ_t of the witness is 4.
ConstructionResult bipartite_min_orientation(int m, int n);

/// Arcs (y_i,x_i) plus (x_i,y_j) for i != j; γ_t of the witness is m+2.
ConstructionResult bipartite_max_orientation(int m, int n);

/// Witness with γ_t exactly k, for any 4 <= k <= m+2; the endpoints delegate
/// to the min and max builders.
ConstructionResult bipartite_k_orientation(int m, int n, int k);

/// Disjoint oriented 4-cycle blocks every four rungs plus a directed tail;
/// γ_t of the witness is m when 4 | m and m+1 otherwise.
ConstructionResult ladder_min_orientation(int m);

/// Outer cycle oriented cyclically, rungs alternating; γ_t of the witness is
/// at least floor(3m/2) + 1.
ConstructionResult ladder_max_orientation(int m);

/// Row pattern with period 3 (the mod-1 and mod-2 cases shorten a taller
/// grid, reorienting one edge and extending the candidate set).
ConstructionResult grid_min_orientation(int m, int n);

/// Rows pushed rightward with alternating vertical lanes; γ_t of the witness
/// is at least ceil(m(n+1)/2).
ConstructionResult grid_max_orientation(int m, int n);

/// Longest induced cycle oriented cyclically, all other edges directed away
/// from it by BFS layer (ties low to high); γ_t of the witness is at least
/// the cycle length.
ConstructionResult induced_cycle_orientation(const Graph& g);

/// Registry of proven values and bounds per family; throws NoTheoremApplies
/// for pairs no theorem covers.
PredictedQuantity predicted(const FamilySpec& spec, PredictedFor quantity);

// closed-form bound evaluators shared with the verification checks
inline int ladder_dom_t_value(int m) { return m % 4 == 0 ? m : m + 1; }
inline int ladder_DOM_t_lower(int m) { return (3 * m) / 2 + 1; }
inline int ladder_DOM_t_upper(int m) { return (5 * 2 * m + 5) / 6; } // ceil(5n(G)/6)
inline int grid_dom_t_lower(int m, int n) { return (m * n + 2) / 3; } // ceil(mn/3)
inline int grid_dom_t_upper(int m, int n) {
    int rows = m % 3 == 0 ? m : (m % 3 == 2 ? m + 1 : m + 2);
    return rows * n / 3 + 2 * rows / 3;
}
inline int grid_DOM_t_lower(int m, int n) { return (m * (n + 1) + 1) / 2; } // ceil((mn+m)/2)
inline double complete_DOM_t_lower(int n) { return std::log2(n) - 2 * std::log2(std::log2(n)); }
inline double complete_DOM_t_upper(int n) { return std::log2(n) - std::log2(std::log2(n)) + 4; }
inline double tournament_gamma_upper(int n) { return std::log2(n) - std::log2(std::log2(n)) + 2; }

} // namespace orientdom
