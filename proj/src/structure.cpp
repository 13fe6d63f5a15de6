#include "orientdom/structure.hpp"

#include <algorithm>
#include <deque>

namespace orientdom {

std::optional<int> girth(const Graph& g) {
    int best = -1;
    std::vector<int> dist(g.n), parent(g.n);
    for (int root = 0; root < g.n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (best != -1 && 2 * dist[v] >= best) break;
            for (int w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v]) {
                    // closed walk through the root; never shorter than the girth
                    int len = dist[v] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

namespace {

// Enumerates every induced cycle once: the path starts at its minimum vertex
// a, and the orientation is fixed by requiring path[1] < closing vertex.
class InducedCycleSearch {
public:
    InducedCycleSearch(const Graph& g, long long budget) : g_(g), budget_(budget) {
        adj_.assign(g.n, std::vector<char>(g.n, 0));
        for (auto [u, v] : g.edges) adj_[u][v] = adj_[v][u] = 1;
        on_path_.assign(g.n, 0);
    }

    void run() {
        for (int a = 0; a < g_.n && !exhausted_; ++a) {
            path_ = {a};
            on_path_[a] = 1;
            for (int b : g_.neighbors(a)) {
                if (b <= a) continue;
                path_.push_back(b);
                on_path_[b] = 1;
                extend();
                on_path_[b] = 0;
                path_.pop_back();
            }
            on_path_[a] = 0;
        }
    }

    int best_length() const { return best_len_; }
    const std::vector<int>& best_cycle() const { return best_cycle_; }
    bool exhausted_budget() const { return exhausted_; }

private:
    void extend() {
        if (--budget_ < 0) {
            exhausted_ = true;
            return;
        }
        int a = path_.front();
        int tail = path_.back();
        for (int w : g_.neighbors(tail)) {
            if (exhausted_) return;
            if (w <= a || on_path_[w]) continue;
            // w must be adjacent to no path vertex other than tail (and
            // possibly a, which closes the cycle)
            bool chord = false;
            for (size_t i = 1; i + 1 < path_.size(); ++i)
                if (adj_[w][path_[i]]) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (adj_[w][a]) {
                if (path_.size() >= 2 && path_[1] < w) {
                    int len = static_cast<int>(path_.size()) + 1;
                    if (len > best_len_) {
                        best_len_ = len;
                        best_cycle_ = path_;
                        best_cycle_.push_back(w);
                    }
                }
                continue; // a chord to a would break inducedness of any extension
            }
            path_.push_back(w);
            on_path_[w] = 1;
            extend();
            on_path_[w] = 0;
            path_.pop_back();
        }
    }

    const Graph& g_;
    long long budget_;
    std::vector<std::vector<char>> adj_;
    std::vector<char> on_path_;
    std::vector<int> path_;
    int best_len_ = 0;
    std::vector<int> best_cycle_;
    bool exhausted_ = false;
};

} // namespace

StructuralProfile structural_profile(const Graph& g, long long node_budget) {
    StructuralProfile p;
    p.components = connected_components(g);
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        if (d == 1) p.leaves.push_back(v);
        if (d == 3) p.degree3_vertices.push_back(v);
        p.max_degree = std::max(p.max_degree, d);
    }
    p.girth = girth(g);
    p.is_unicyclic = p.components.size() == 1 && g.edge_count() == g.n && p.girth.has_value();

    if (p.girth.has_value()) {
        if (g.n > 512) {
            // the exponential search is only meant for desk-scale graphs
            p.induced_cycle_budget_exceeded = true;
        } else {
            InducedCycleSearch search(g, node_budget);
            search.run();
            p.longest_induced_cycle = search.best_length();
            p.longest_induced_cycle_vertices = search.best_cycle();
            p.induced_cycle_budget_exceeded = search.exhausted_budget();
        }
    }
    return p;
}

} // namespace orientdom
