#include "orientdom/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <thread>

#include "orientdom/structure.hpp"

namespace orientdom {

const char* quantity_name(ExtremalQuantity q) {
    switch (q) {
        case ExtremalQuantity::DomT: return "dom_t";
        case ExtremalQuantity::DOMT: return "DOM_t";
        case ExtremalQuantity::DOMPlain: return "DOM";
    }
    return "?";
}

namespace {

constexpr uint64_t bit(int i) { return uint64_t{1} << i; }

enum class Mode { Min, Max, MaxGamma, Spect };

// Depth-first assignment of direction bits in canonical edge order, one
// shard per prefix of the first `s` edges. A vertex with in-degree 0 whose
// last undecided edge is being decided forces that edge inward; a branch
// that cannot give both endpoints an in-arc is pruned. Prefix-level dead
// branches are accounted by the shard whose remaining prefix bits are zero,
// so merged statistics are identical for every worker count.
class Enumerator {
public:
    Enumerator(const Graph& g, bool require_valid, long long quota)
        : g_(&g), m_(g.edge_count()), require_valid_(require_valid), quota_(quota) {
        indeg_.assign(g.n, 0);
        undecided_.assign(g.n, 0);
        for (auto [u, v] : g.edges) {
            ++undecided_[u];
            ++undecided_[v];
        }
        out_mask_.assign(g.n, 0);
        in_mask_.assign(g.n, 0);
        dir_.assign(m_, 0);
        zero_indeg_ = g.n;
    }

    const std::vector<uint8_t>& dir() const { return dir_; }
    const uint64_t* out_masks() const { return out_mask_.data(); }
    const uint64_t* in_masks() const { return in_mask_.data(); }
    int zero_in_degrees() const { return zero_indeg_; }

    long long visited() const { return visited_; }
    long long pruned() const { return pruned_; }
    bool achieved() const { return achieved_; }
    long long visited_at_achieve() const { return visited_at_achieve_; }
    long long pruned_at_achieve() const { return pruned_at_achieve_; }
    bool quota_hit() const { return quota_hit_; }

    void set_abort_probe(const std::function<bool()>& probe) { abort_probe_ = probe; }

    template <class Leaf>
    void run(uint32_t prefix, int prefix_len, Leaf&& leaf) {
        if (!apply_prefix(prefix, prefix_len)) return;
        dfs(prefix_len, leaf);
    }

private:
    std::pair<bool, bool> allowed(int e) const {
        if (!require_valid_) return {true, true};
        auto [u, v] = g_->edges[e];
        bool need_in_u = indeg_[u] == 0 && undecided_[u] == 1;
        bool need_in_v = indeg_[v] == 0 && undecided_[v] == 1;
        // direction bit 0 puts the arc into v, bit 1 into u
        return {!need_in_u, !need_in_v};
    }

    void apply(int e, int d) {
        auto [u, v] = g_->edges[e];
        int from = d ? v : u, to = d ? u : v;
        dir_[e] = static_cast<uint8_t>(d);
        out_mask_[from] |= bit(to);
        in_mask_[to] |= bit(from);
        if (indeg_[to]++ == 0) --zero_indeg_;
        --undecided_[u];
        --undecided_[v];
    }

    void undo(int e, int d) {
        auto [u, v] = g_->edges[e];
        int from = d ? v : u, to = d ? u : v;
        out_mask_[from] &= ~bit(to);
        in_mask_[to] &= ~bit(from);
        if (--indeg_[to] == 0) ++zero_indeg_;
        ++undecided_[u];
        ++undecided_[v];
    }

    bool apply_prefix(uint32_t prefix, int s) {
        for (int e = 0; e < s; ++e) {
            int b = (prefix >> (s - 1 - e)) & 1;
            auto [a0, a1] = allowed(e);
            bool mine = b == 0 ? a0 : a1;
            bool other = b == 0 ? a1 : a0;
            if (!mine) {
                uint32_t below = static_cast<uint32_t>(s - 1 - e);
                uint32_t suffix = below == 0 ? 0 : (prefix & ((1u << below) - 1));
                if (suffix == 0 && (other || b == 0)) ++pruned_;
                return false;
            }
            apply(e, b);
        }
        return true;
    }

    template <class Leaf>
    void dfs(int e, Leaf& leaf) {
        if (e == m_) {
            if (quota_ > 0 && visited_ >= quota_) {
                quota_hit_ = true;
                return;
            }
            ++visited_;
            if (abort_probe_ && (visited_ & 0x3ff) == 0 && abort_probe_()) {
                aborted_externally_ = true;
                achieved_ = true; // merged results never read an aborted shard
                visited_at_achieve_ = visited_;
                pruned_at_achieve_ = pruned_;
                return;
            }
            if (!leaf(*this)) {
                achieved_ = true;
                visited_at_achieve_ = visited_;
                pruned_at_achieve_ = pruned_;
            }
            return;
        }
        auto [a0, a1] = allowed(e);
        if (!a0 && !a1) {
            ++pruned_;
            return;
        }
        if (a0) {
            apply(e, 0);
            dfs(e + 1, leaf);
            undo(e, 0);
        } else {
            ++pruned_;
        }
        if (achieved_ || quota_hit_) return;
        if (a1) {
            apply(e, 1);
            dfs(e + 1, leaf);
            undo(e, 1);
        } else {
            ++pruned_;
        }
    }

    const Graph* g_;
    int m_;
    bool require_valid_;
    long long quota_;
    std::vector<int> indeg_, undecided_;
    std::vector<uint64_t> out_mask_, in_mask_;
    std::vector<uint8_t> dir_;
    int zero_indeg_ = 0;
    long long visited_ = 0, pruned_ = 0;
    long long visited_at_achieve_ = 0, pruned_at_achieve_ = 0;
    bool achieved_ = false;
    bool quota_hit_ = false;
    bool aborted_externally_ = false;
    std::function<bool()> abort_probe_;
};

struct ShardOutcome {
    long long visited = 0, pruned = 0;
    bool achieved = false;
    long long visited_at_achieve = 0, pruned_at_achieve = 0;
    bool quota_hit = false;
    bool has_value = false;
    int value = 0;
    std::vector<uint8_t> witness;
    bool any_valid_at_value = false;
    std::map<int, std::vector<uint8_t>> spectrum;
    std::exception_ptr error;
};

void run_shard(const Graph& g, Mode mode, int target, const OptimizeOptions& opts, uint32_t prefix,
               int prefix_len, ShardOutcome& out, const std::function<bool()>& abort_probe) {
    bool require_valid = mode != Mode::MaxGamma;
    Enumerator en(g, require_valid, opts.max_orientations);
    if (abort_probe) en.set_abort_probe(abort_probe);
    CoverSolver64 solver;
    int n = g.n;
    std::vector<uint64_t> closed_rows(n), closed_cov(n);
    int cur = mode == Mode::Min ? n + 1 : -1;
    bool has_cur = false;

    auto leaf = [&](Enumerator& e) -> bool {
        switch (mode) {
            case Mode::Min: {
                int cutoff = has_cur ? cur : n + 1;
                int val = solver.solve(n, e.out_masks(), e.in_masks(), cutoff);
                if (val < cutoff) {
                    cur = val;
                    has_cur = true;
                    out.witness = e.dir();
                    if (target >= 0 && val <= target) return false;
                }
                return true;
            }
            case Mode::Max: {
                if (has_cur && solver.greedy(n, e.out_masks()) <= cur) return true;
                int val = solver.solve(n, e.out_masks(), e.in_masks(), n + 1);
                if (!has_cur || val > cur) {
                    cur = val;
                    has_cur = true;
                    out.witness = e.dir();
                    if (target >= 0 && val >= target) return false;
                }
                return true;
            }
            case Mode::MaxGamma: {
                for (int v = 0; v < n; ++v) {
                    closed_rows[v] = e.out_masks()[v] | bit(v);
                    closed_cov[v] = e.in_masks()[v] | bit(v);
                }
                // skip only below the running maximum: achievers tied with it
                // still matter for the valid-achiever flag
                if (has_cur && solver.greedy(n, closed_rows.data()) < cur) return true;
                int val = solver.solve(n, closed_rows.data(), closed_cov.data(), n + 1);
                if (!has_cur || val > cur) {
                    cur = val;
                    has_cur = true;
                    out.witness = e.dir();
                    out.any_valid_at_value = e.zero_in_degrees() == 0;
                } else if (val == cur && e.zero_in_degrees() == 0) {
                    out.any_valid_at_value = true;
                }
                return true;
            }
            case Mode::Spect: {
                int val = solver.solve(n, e.out_masks(), e.in_masks(), n + 1);
                out.spectrum.try_emplace(val, e.dir());
                return true;
            }
        }
        return true;
    };
    en.run(prefix, prefix_len, leaf);

    out.visited = en.visited();
    out.pruned = en.pruned();
    out.achieved = en.achieved();
    out.visited_at_achieve = en.visited_at_achieve();
    out.pruned_at_achieve = en.pruned_at_achieve();
    out.quota_hit = en.quota_hit();
    out.has_value = has_cur;
    out.value = cur;
}

std::vector<ShardOutcome> run_all_shards(const Graph& g, Mode mode, int target,
                                         const OptimizeOptions& opts) {
    int m = g.edge_count();
    if (g.n > 64) fail(ErrorCode::TooLarge, "orientation search supports at most 64 vertices");
    if (m > opts.edge_cap)
        fail(ErrorCode::TooManyOrientations,
             std::to_string(m) + " edges is above the cap of " + std::to_string(opts.edge_cap) +
                 "; raise the edge cap to run 2^" + std::to_string(m) + " orientations");

    unsigned hw = std::thread::hardware_concurrency();
    int workers = opts.workers > 0 ? opts.workers : static_cast<int>(hw ? hw : 1);
    int s = 0;
    while ((1 << s) < workers && s < m && s < 12) ++s;
    int shards = 1 << s;
    std::vector<ShardOutcome> out(shards);

    if (workers == 1) {
        for (int k = 0; k < shards; ++k) {
            run_shard(g, mode, target, opts, static_cast<uint32_t>(k), s, out[k], nullptr);
            if (out[k].achieved) break;
        }
        return out;
    }

    std::atomic<int> next{0};
    std::atomic<int> first_achiever{INT_MAX};
    std::vector<std::thread> pool;
    auto work = [&] {
        for (;;) {
            int k = next.fetch_add(1);
            if (k >= shards) return;
            // shards after a known achiever can never reach the merge
            auto probe = [&first_achiever, k] { return k > first_achiever.load(std::memory_order_relaxed); };
            if (probe()) continue;
            try {
                run_shard(g, mode, target, opts, static_cast<uint32_t>(k), s, out[k], probe);
                if (out[k].achieved) {
                    int cur = first_achiever.load();
                    while (k < cur && !first_achiever.compare_exchange_weak(cur, k)) {
                    }
                }
            } catch (...) {
                out[k].error = std::current_exception();
            }
        }
    };
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    return out;
}

struct Merged {
    bool has_value = false;
    int value = 0;
    std::vector<uint8_t> witness;
    bool any_valid = false;
    long long visited = 0, pruned = 0;
    bool exact = true;
};

Merged merge_extremum(std::vector<ShardOutcome>& shards, Mode mode) {
    Merged m;
    for (auto& s : shards) {
        if (s.error) std::rethrow_exception(s.error);
        if (s.achieved) {
            m.visited += s.visited_at_achieve;
            m.pruned += s.pruned_at_achieve;
        } else {
            m.visited += s.visited;
            m.pruned += s.pruned;
        }
        if (s.quota_hit) m.exact = false;
        if (s.has_value) {
            bool better =
                !m.has_value || (mode == Mode::Min ? s.value < m.value : s.value > m.value);
            if (better) {
                m.has_value = true;
                m.value = s.value;
                m.witness = s.witness;
                m.any_valid = s.any_valid_at_value;
            } else if (s.value == m.value && s.any_valid_at_value) {
                m.any_valid = true;
            }
        }
        if (s.achieved) break; // a sequential run stops here
    }
    return m;
}

int dom_t_lower_bound(const Graph& g) {
    int bound = gamma_t_undirected(g);
    if (auto gir = girth(g)) bound = std::max(bound, *gir);
    return bound;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ExtremumReport finish_report(const Graph& g, ExtremalQuantity q, Mode mode, Merged&& m,
                             double elapsed) {
    if (!m.has_value)
        fail(ErrorCode::BudgetExceeded, "orientation quota ran out before any orientation was evaluated");
    ExtremumReport r;
    r.quantity = q;
    r.value = m.value;
    r.exact = m.exact;
    r.witness_dir = std::move(m.witness);
    r.witness = orient(g, r.witness_dir);
    r.witness_cert = (mode == Mode::MaxGamma ? gamma(r.witness) : gamma_t(r.witness)).cert;
    r.some_optimal_orientation_valid = m.any_valid;
    r.orientations_considered = m.visited;
    r.pruned_subtrees = m.pruned;
    r.elapsed_seconds = elapsed;
    return r;
}

void require_cyclic_components(const Graph& g, ErrorCode code) {
    int witness = -1;
    if (!every_component_cyclic(g, &witness))
        fail(code, "the component of vertex " + std::to_string(witness) +
                       " is a tree, so no valid orientation exists");
}

} // namespace

ExtremumReport dom_t(const Graph& g, const OptimizeOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    require_cyclic_components(g, ErrorCode::NoValidOrientation);
    int target = opts.early_exit ? dom_t_lower_bound(g) : -1;
    auto shards = run_all_shards(g, Mode::Min, target, opts);
    auto merged = merge_extremum(shards, Mode::Min);
    return finish_report(g, ExtremalQuantity::DomT, Mode::Min, std::move(merged), seconds_since(t0));
}

ExtremumReport DOM_t(const Graph& g, const OptimizeOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    require_cyclic_components(g, ErrorCode::NoValidOrientation);
    int target = opts.known_upper_bound.value_or(-1);
    auto shards = run_all_shards(g, Mode::Max, target, opts);
    auto merged = merge_extremum(shards, Mode::Max);
    return finish_report(g, ExtremalQuantity::DOMT, Mode::Max, std::move(merged), seconds_since(t0));
}

ExtremumReport DOM(const Graph& g, const OptimizeOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    auto shards = run_all_shards(g, Mode::MaxGamma, -1, opts);
    auto merged = merge_extremum(shards, Mode::MaxGamma);
    return finish_report(g, ExtremalQuantity::DOMPlain, Mode::MaxGamma, std::move(merged),
                         seconds_since(t0));
}

Spectrum td_spectrum(const Graph& g, const OptimizeOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    require_cyclic_components(g, ErrorCode::NoValidOrientation);
    auto shards = run_all_shards(g, Mode::Spect, -1, opts);
    Spectrum sp;
    for (auto& s : shards) {
        if (s.error) std::rethrow_exception(s.error);
        sp.orientations_considered += s.visited;
        sp.pruned_subtrees += s.pruned;
        if (s.quota_hit) sp.exact = false;
        for (auto& [value, dir] : s.spectrum) sp.witnesses.try_emplace(value, dir);
    }
    for (auto& [value, dir] : sp.witnesses) sp.values.push_back(value);
    sp.contiguous = !sp.values.empty() &&
                    sp.values.back() - sp.values.front() + 1 == static_cast<int>(sp.values.size());
    sp.elapsed_seconds = seconds_since(t0);
    return sp;
}

long long for_each_valid_orientation(const Graph& g,
                                     const std::function<bool(const Orientation&)>& visit,
                                     const OptimizeOptions& opts) {
    int m = g.edge_count();
    if (g.n > 64) fail(ErrorCode::TooLarge, "orientation search supports at most 64 vertices");
    if (m > opts.edge_cap)
        fail(ErrorCode::TooManyOrientations,
             std::to_string(m) + " edges is above the cap of " + std::to_string(opts.edge_cap));
    require_cyclic_components(g, ErrorCode::EmptyByTreeComponent);
    Enumerator en(g, true, opts.max_orientations);
    en.run(0u, 0, [&](Enumerator& e) { return visit(orient(g, e.dir())); });
    return en.visited();
}

std::vector<Orientation> enumerate_valid_orientations(const Graph& g, const OptimizeOptions& opts) {
    std::vector<Orientation> all;
    for_each_valid_orientation(
        g,
        [&](const Orientation& o) {
            all.push_back(o);
            return true;
        },
        opts);
    return all;
}

long long count_valid_orientations(const Graph& g, const OptimizeOptions& opts) {
    return for_each_valid_orientation(g, [](const Orientation&) { return true; }, opts);
}

} // namespace orientdom
