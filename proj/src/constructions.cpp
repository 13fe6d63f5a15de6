#include "orientdom/constructions.hpp"

#include <algorithm>
#include <deque>

#include "orientdom/structure.hpp"

namespace orientdom {

namespace {

void need(bool ok, const std::string& what) {
    if (!ok) fail(ErrorCode::InvalidFamilyParams, what);
}

using ArcList = std::vector<std::pair<int, int>>;

ConstructionResult finish(Graph g, const ArcList& arcs, std::vector<int> cand,
                          PredictedQuantity predicted) {
    ConstructionResult r;
    r.orientation = orient_by_arcs(std::move(g), arcs);
    std::sort(cand.begin(), cand.end());
    r.candidate_set = std::move(cand);
    r.predicted = predicted;
    return r;
}

} // namespace

ConstructionResult bipartite_min_orientation(int m, int n) {
    need(2 <= m && m <= n, "needs 2 <= m <= n");
    Graph g = make_family(FamilySpec::complete_bipartite(m, n));
    auto x = [&](int i) { return i - 1; };
    auto y = [&](int j) { return m + j - 1; };
    ArcList arcs = {{x(1), y(1)}, {y(1), x(2)}, {x(2), y(2)}, {y(2), x(1)}};
    for (int j = 3; j <= n; ++j) arcs.emplace_back(x(1), y(j));
    for (int i = 3; i <= m; ++i) arcs.emplace_back(y(1), x(i));
    for (int i = 2; i <= m; ++i)
        for (int j = 2; j <= n; ++j)
            if (!(i == 2 && j == 2)) arcs.emplace_back(x(i), y(j));
    return finish(std::move(g), arcs, {x(1), x(2), y(1), y(2)},
                  {PredictedFor::DomT, PredictedRelation::Equals, 4, 0});
}

ConstructionResult bipartite_max_orientation(int m, int n) {
    need(2 <= m && m <= n, "needs 2 <= m <= n");
    Graph g = make_family(FamilySpec::complete_bipartite(m, n));
    auto x = [&](int i) { return i - 1; };
    auto y = [&](int j) { return m + j - 1; };
    ArcList arcs;
    std::vector<int> cand = {x(1), x(2)};
    for (int i = 1; i <= m; ++i) {
        arcs.emplace_back(y(i), x(i));
        cand.push_back(y(i));
    }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) arcs.emplace_back(x(i), y(j));
    return finish(std::move(g), arcs, std::move(cand),
                  {PredictedFor::DOMT, PredictedRelation::Equals, m + 2, 0});
}

ConstructionResult bipartite_k_orientation(int m, int n, int k) {
    need(2 <= m && m <= n, "needs 2 <= m <= n");
    need(4 <= k && k <= m + 2, "needs 4 <= k <= m+2");
    if (k == 4 || k == m + 2) {
        auto r = k == 4 ? bipartite_min_orientation(m, n) : bipartite_max_orientation(m, n);
        r.predicted = {PredictedFor::GammaTOfWitness, PredictedRelation::Equals, k, 0};
        return r;
    }
    Graph g = make_family(FamilySpec::complete_bipartite(m, n));
    auto x = [&](int i) { return i - 1; };
    auto y = [&](int j) { return m + j - 1; };
    ArcList arcs;
    std::vector<int> cand = {x(1), x(2)};
    std::vector<std::vector<char>> toward_x(m + 1, std::vector<char>(n + 1, 0));
    for (int i = 1; i <= k - 3; ++i) {
        arcs.emplace_back(y(i), x(i));
        toward_x[i][i] = 1;
        cand.push_back(y(i));
    }
    cand.push_back(y(k - 2));
    for (int i = k - 2; i <= m; ++i) {
        arcs.emplace_back(y(k - 2), x(i));
        toward_x[i][k - 2] = 1;
    }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            if (!toward_x[i][j]) arcs.emplace_back(x(i), y(j));
    return finish(std::move(g), arcs, std::move(cand),
                  {PredictedFor::GammaTOfWitness, PredictedRelation::Equals, k, 0});
}

ConstructionResult ladder_min_orientation(int m) {
    need(m >= 3, "needs m >= 3");
    Graph g = make_family(FamilySpec::ladder(m));
    auto u = [&](int i) { return i - 1; };
    auto v = [&](int i) { return m + i - 1; };
    int k = m == 3 ? 0 : m / 4, o = m % 4;
    std::vector<int> block_starts;
    if (m == 3)
        block_starts = {2}; // the m = 4k + o split needs k >= 1
    else
        for (int l = 0; l < k; ++l) block_starts.push_back(2 + 4 * l);

    std::vector<char> in_a(2 * m, 0);
    std::vector<int> cand;
    auto add = [&](int vertex) {
        in_a[vertex] = 1;
        cand.push_back(vertex);
    };
    for (int i : block_starts) {
        add(u(i));
        add(u(i + 1));
        add(v(i));
        add(v(i + 1));
    }
    int tail_from = 0;
    if (m != 3 && o != 0) {
        tail_from = 4 * k - 1; // directed path starts inside the last block
        for (int i = 4 * k; i <= m; ++i) add(u(i));
    }

    std::vector<char> tail_vertex(2 * m, 0);
    if (tail_from > 0)
        for (int i = tail_from; i <= m; ++i) tail_vertex[u(i)] = 1;

    ArcList arcs;
    for (int i : block_starts) {
        arcs.emplace_back(u(i), u(i + 1));
        arcs.emplace_back(u(i + 1), v(i + 1));
        arcs.emplace_back(v(i + 1), v(i));
        arcs.emplace_back(v(i), u(i));
    }
    std::vector<char> covered(g.edges.size(), 0);
    for (auto [from, to] : arcs) covered[g.edge_index(from, to)] = 1;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (covered[e]) continue;
        auto [a, b] = g.edges[e];
        if (tail_vertex[a] && tail_vertex[b] && a < m && b < m) {
            arcs.emplace_back(std::min(a, b), std::max(a, b)); // u_i -> u_{i+1}
        } else if (in_a[a] != in_a[b]) {
            arcs.emplace_back(in_a[a] ? a : b, in_a[a] ? b : a); // out of A
        } else {
            arcs.emplace_back(a, b);
        }
    }
    return finish(std::move(g), arcs, std::move(cand),
                  {PredictedFor::DomT, PredictedRelation::Equals, ladder_dom_t_value(m), 0});
}

ConstructionResult ladder_max_orientation(int m) {
    need(m >= 3, "needs m >= 3");
    Graph g = make_family(FamilySpec::ladder(m));
    auto u = [&](int i) { return i - 1; };
    auto v = [&](int i) { return m + i - 1; };
    ArcList arcs;
    for (int i = 1; i < m; ++i) {
        arcs.emplace_back(u(i), u(i + 1));
        arcs.emplace_back(v(i + 1), v(i));
    }
    arcs.emplace_back(u(m), v(m));
    arcs.emplace_back(v(1), u(1));
    for (int i = 2; i <= m - 1; ++i) {
        if (i % 2 == 0)
            arcs.emplace_back(u(i), v(i));
        else
            arcs.emplace_back(v(i), u(i));
    }
    ConstructionResult r;
    r.orientation = orient_by_arcs(std::move(g), arcs);
    r.candidate_set = gamma_t(r.orientation).cert.set;
    r.predicted = {PredictedFor::GammaTOfWitness, PredictedRelation::AtLeast,
                   ladder_DOM_t_lower(m), 0};
    return r;
}

ConstructionResult grid_min_orientation(int m, int n) {
    need(3 <= m && m <= n, "needs 3 <= m <= n");
    Graph g = make_family(FamilySpec::grid(m, n));
    int base_rows = m % 3 == 0 ? m : (m % 3 == 2 ? m + 1 : m + 2);
    int row_off = m % 3 == 0 ? 0 : 1; // rows (1+off)..(m+off) of the taller grid
    auto old_row = [&](int i) { return i + row_off; };

    auto rightward = [&](int oi, int j) { // edge (oi,j)-(oi,j+1)
        int r = oi % 3;
        if (r == 1) return true;
        if (r == 2) return j != 1; // first edge points left
        return j != n - 1;         // last edge points left
    };
    auto downward = [&](int oi, int j) { // edge (oi,j)-(oi+1,j)
        int r = oi % 3;
        if (r == 1) return false; // up into rows = 1 (mod 3)
        if (r == 2) return j != 2;
        return true;
    };

    ArcList arcs;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            if (j < n) {
                bool right = rightward(old_row(i), j);
                int a = grid_vertex(n, i, j), b = grid_vertex(n, i, j + 1);
                arcs.emplace_back(right ? a : b, right ? b : a);
            }
            if (i < m) {
                bool down = downward(old_row(i), j);
                // the shortened m = 1 (mod 3) grid reorients this single edge;
                // its lower endpoint keeps positive in-degree that way
                if (m % 3 == 1 && j == 2 && old_row(i) == base_rows - 2) down = !down;
                int a = grid_vertex(n, i, j), b = grid_vertex(n, i + 1, j);
                arcs.emplace_back(down ? a : b, down ? b : a);
            }
        }

    std::vector<int> cand;
    for (int i = 1; i <= m; ++i) {
        int r = old_row(i) % 3;
        if (r == 2)
            for (int j = 1; j <= n; ++j) cand.push_back(grid_vertex(n, i, j));
        else if (r == 0) {
            cand.push_back(grid_vertex(n, i, 1));
            cand.push_back(grid_vertex(n, i, 2));
        }
    }
    if (m % 3 == 1) {
        cand.push_back(grid_vertex(n, m - 1, 1));
        cand.push_back(grid_vertex(n, m - 1, 2));
    }
    return finish(std::move(g), arcs, std::move(cand),
                  {PredictedFor::DomT, PredictedRelation::AtMost, grid_dom_t_upper(m, n), 0});
}

ConstructionResult grid_max_orientation(int m, int n) {
    need(3 <= m && m <= n, "needs 3 <= m <= n");
    Graph g = make_family(FamilySpec::grid(m, n));
    ArcList arcs;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j < n; ++j) {
            int a = grid_vertex(n, i, j), b = grid_vertex(n, i, j + 1);
            if (i == 1 && j == 1)
                arcs.emplace_back(b, a); // the single leftward arc
            else
                arcs.emplace_back(a, b);
        }
    for (int i = 1; i < m; ++i)
        for (int j = 1; j <= n; ++j) {
            int a = grid_vertex(n, i, j), b = grid_vertex(n, i + 1, j);
            bool up;
            if (i == 1)
                up = j == 2;
            else if (i % 2 == 0)
                up = 2 <= j && j <= n - 1;
            else
                up = false;
            if (up)
                arcs.emplace_back(b, a);
            else
                arcs.emplace_back(a, b);
        }

    std::vector<int> cand;
    for (int i = 1; i <= m; ++i)
        if (i % 2 == 1)
            for (int j = 1; j <= n; ++j) cand.push_back(grid_vertex(n, i, j));
    for (int i = 2; i < m; i += 2) cand.push_back(grid_vertex(n, i, 1));
    cand.push_back(grid_vertex(n, 2, 2));
    if (m % 2 == 1)
        cand.erase(std::find(cand.begin(), cand.end(), grid_vertex(n, m, n)));
    return finish(std::move(g), arcs, std::move(cand),
                  {PredictedFor::GammaTOfWitness, PredictedRelation::AtLeast,
                   grid_DOM_t_lower(m, n), 0});
}

ConstructionResult induced_cycle_orientation(const Graph& g) {
    if (!is_connected(g)) fail(ErrorCode::InvalidFamilyParams, "graph must be connected");
    StructuralProfile p = structural_profile(g);
    if (!p.girth.has_value()) fail(ErrorCode::NoCycle, "graph is a tree");
    const auto& cycle = p.longest_induced_cycle_vertices;
    int r = static_cast<int>(cycle.size());

    std::vector<int> dist(g.n, -1);
    std::deque<int> queue;
    for (int c : cycle) {
        dist[c] = 0;
        queue.push_back(c);
    }
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (int b : g.neighbors(a))
            if (dist[b] == -1) {
                dist[b] = dist[a] + 1;
                queue.push_back(b);
            }
    }

    ArcList arcs;
    for (int t = 0; t < r; ++t) arcs.emplace_back(cycle[t], cycle[(t + 1) % r]);
    for (auto [a, b] : g.edges) {
        if (dist[a] == 0 && dist[b] == 0) continue; // the induced cycle has no chords
        if (dist[a] < dist[b])
            arcs.emplace_back(a, b);
        else if (dist[b] < dist[a])
            arcs.emplace_back(b, a);
        else
            arcs.emplace_back(std::min(a, b), std::max(a, b)); // same layer: low to high
    }
    ConstructionResult result;
    result.orientation = orient_by_arcs(g, arcs);
    result.candidate_set = gamma_t(result.orientation).cert.set;
    result.predicted = {PredictedFor::GammaTOfWitness, PredictedRelation::AtLeast, r, 0};
    return result;
}

namespace {

PredictedQuantity equals(PredictedFor q, int v) { return {q, PredictedRelation::Equals, v, 0}; }
PredictedQuantity at_least(PredictedFor q, int v) { return {q, PredictedRelation::AtLeast, v, 0}; }
PredictedQuantity between(PredictedFor q, int lo, int hi) {
    return {q, PredictedRelation::Between, lo, hi};
}

} // namespace

PredictedQuantity predicted(const FamilySpec& spec, PredictedFor quantity) {
    bool want_min = quantity == PredictedFor::DomT;
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::Cycle:
            if (p.size() == 1 && p[0] >= 3) return equals(quantity, p[0]);
            break;
        case FamilyKind::FamilyF:
            if (p.size() == 2 && p[0] >= 3 && p[1] >= 2)
                return equals(quantity, (p[0] + p[1] - 1) - 1); // exactly one leaf
            break;
        case FamilyKind::CycleWithLeaves:
            // unicyclic: both extrema are n - |L|, which is the cycle length
            if (p.size() >= 3) return equals(quantity, static_cast<int>(p.size()));
            break;
        case FamilyKind::CompleteBipartite: {
            if (p.size() != 2) break;
            int a = std::min(p[0], p[1]);
            if (a < 2) break; // stars are trees
            return equals(quantity, want_min ? 4 : a + 2);
        }
        case FamilyKind::Ladder: {
            if (p.size() != 1 || p[0] < 3) break;
            int m = p[0];
            return want_min ? equals(quantity, ladder_dom_t_value(m))
                            : between(quantity, ladder_DOM_t_lower(m), ladder_DOM_t_upper(m));
        }
        case FamilyKind::Grid: {
            if (p.size() != 2) break;
            int a = std::min(p[0], p[1]), b = std::max(p[0], p[1]);
            if (a == 2) return predicted(FamilySpec::ladder(b), quantity);
            if (a < 3) break;
            return want_min ? between(quantity, grid_dom_t_lower(a, b), grid_dom_t_upper(a, b))
                            : at_least(quantity, grid_DOM_t_lower(a, b));
        }
        case FamilyKind::Complete: {
            if (p.size() != 1 || p[0] < 3) break;
            if (want_min) return equals(quantity, 3);
            int lo = static_cast<int>(std::ceil(complete_DOM_t_lower(p[0]) - 1e-9));
            int hi = static_cast<int>(std::floor(complete_DOM_t_upper(p[0]) + 1e-9));
            return between(quantity, lo, hi);
        }
        case FamilyKind::Wheel:
            if (p.size() == 1 && p[0] >= 3 && want_min) return equals(quantity, 3);
            break;
        default:
            break;
    }
    fail(ErrorCode::NoTheoremApplies,
         "no registered theorem for " + family_spec_to_string(spec) + " / " +
             (want_min ? "dom_t" : "DOM_t"));
}

} // namespace orientdom
