#pragma once

#include <string>
#include <vector>

#include "orientdom/graph.hpp"

namespace orientdom {

enum class FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Wheel,
    Grid,
    Ladder,
    FamilyF,
    CycleWithLeaves,
    CartesianProduct,
};

/// A named graph family plus its integer parameters. Spec strings use the
/// mini-grammar "name:p1,p2" (e.g. "grid:6,8"); Cartesian products nest as
/// "product(cycle:3,cycle:3)".
struct FamilySpec {
    FamilyKind kind;
    std::vector<int> params;
    std::vector<FamilySpec> factors; // CartesianProduct only

    static FamilySpec path(int n) { return {FamilyKind::Path, {n}, {}}; }
    static FamilySpec cycle(int n) { return {FamilyKind::Cycle, {n}, {}}; }
    static FamilySpec complete(int n) { return {FamilyKind::Complete, {n}, {}}; }
    static FamilySpec complete_bipartite(int m, int n) { return {FamilyKind::CompleteBipartite, {m, n}, {}}; }
    static FamilySpec wheel(int n) { return {FamilyKind::Wheel, {n}, {}}; }
    static FamilySpec grid(int m, int n) { return {FamilyKind::Grid, {m, n}, {}}; }
    static FamilySpec ladder(int m) { return {FamilyKind::Ladder, {m}, {}}; }
    static FamilySpec family_f(int k, int ell) { return {FamilyKind::FamilyF, {k, ell}, {}}; }
    static FamilySpec cycle_with_leaves(std::vector<int> leaf_counts);
    static FamilySpec product(FamilySpec a, FamilySpec b);
};

/// Deterministic vertex numbering per family:
///  - grid(m,n): row-major, u_{i,j} at (i-1)*n + (j-1) for 1-based i,j
///  - ladder(m): u_i at i-1, v_i at m+i-1 (same as grid(2,m))
///  - familyF(k,l): cycle 0..k-1, pendant path k..k+l-2 attached at 0
///  - completeBipartite(m,n): X side 0..m-1, Y side m..m+n-1
///  - wheel(n): rim 0..n-1, hub n
///  - cycleWithLeaves: cycle 0..k-1, then leaves grouped by cycle vertex
Graph make_family(const FamilySpec& spec);

/// Vertex index of u_{i,j} (1-based) in the row-major grid numbering.
inline int grid_vertex(int cols, int i, int j) { return (i - 1) * cols + (j - 1); }

Graph cartesian_product(const Graph& g, const Graph& h, int max_vertices = 64);

FamilySpec parse_family_spec(const std::string& text);
std::string family_spec_to_string(const FamilySpec& spec);

} // namespace orientdom
