#include "orientdom/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>

namespace orientdom {

namespace {

constexpr uint64_t bit(int i) { return uint64_t{1} << i; }

uint64_t full_mask(int n) { return n == 64 ? ~uint64_t{0} : bit(n) - 1; }

struct WordProblem {
    int n;
    uint64_t full;
    const uint64_t* rows;     // rows[u]: what u covers
    const uint64_t* coverers; // coverers[v]: who covers v
};

int greedy_cover(const WordProblem& p, uint64_t* mask_out) {
    uint64_t covered = 0, chosen = 0;
    int count = 0;
    while ((p.full & ~covered) != 0) {
        uint64_t uncovered = p.full & ~covered;
        int best_u = -1, best_c = 0;
        for (int u = 0; u < p.n; ++u) {
            if ((chosen >> u) & 1) continue;
            int c = std::popcount(p.rows[u] & uncovered);
            if (c > best_c) {
                best_c = c;
                best_u = u;
            }
        }
        if (best_u < 0) return p.n + 1; // some vertex is uncoverable
        chosen |= bit(best_u);
        covered |= p.rows[best_u];
        ++count;
    }
    if (mask_out) *mask_out = chosen;
    return count;
}

// Branch-and-bound set cover. Unit propagation picks the unique coverer of
// any element that has one left (the in-degree-1 forcing rule); branching is
// on the uncovered element with fewest remaining coverers, candidates tried
// in ascending order with earlier ones excluded from later branches.
class WordSearch {
public:
    explicit WordSearch(const WordProblem& p) : p_(p) {}

    void seed(uint64_t mask, int size) {
        seed_mask_ = mask;
        seed_size_ = size;
        has_seed_ = true;
    }

    // Minimum cover (below `cutoff`) containing forced_in and avoiding
    // banned; returns cutoff if no such cover is smaller. stop_at >= 0 turns
    // the search into a feasibility probe that aborts once a cover of size
    // <= stop_at is found.
    int run(uint64_t forced_in, uint64_t banned, int cutoff, int stop_at, uint64_t* mask_out,
            long long* root_forced_out) {
        best_ = cutoff;
        have_best_mask_ = false;
        if (has_seed_ && seed_size_ < best_) {
            best_ = seed_size_;
            best_mask_ = seed_mask_;
            have_best_mask_ = true;
        }
        stop_at_ = stop_at;
        aborted_ = stop_at_ >= 0 && best_ <= stop_at_;
        root_forced_ = root_forced_out;

        uint64_t covered = 0;
        uint64_t avail = p_.full & ~banned & ~forced_in;
        int count = std::popcount(forced_in);
        for (uint64_t m = forced_in; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            covered |= p_.rows[u];
        }
        dfs(covered, avail, forced_in, count);
        if (mask_out && have_best_mask_) *mask_out = best_mask_;
        return best_;
    }

    long long nodes() const { return nodes_; }

private:
    static constexpr int kOpen = 0, kComplete = 1, kInfeasible = 2;

    int propagate(uint64_t& covered, uint64_t& avail, uint64_t& chosen, int& count,
                  long long* forced_sink) {
        for (;;) {
            uint64_t uncovered = p_.full & ~covered;
            if (!uncovered) return kComplete;
            uint64_t pick = 0;
            for (uint64_t m = uncovered; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                uint64_t cov = p_.coverers[v] & avail;
                if (!cov) return kInfeasible;
                if (!(cov & (cov - 1))) pick |= cov;
            }
            if (!pick) return kOpen;
            int added = std::popcount(pick);
            count += added;
            if (forced_sink) *forced_sink += added;
            chosen |= pick;
            avail &= ~pick;
            for (uint64_t m = pick; m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                covered |= p_.rows[u];
            }
        }
    }

    void dfs(uint64_t covered, uint64_t avail, uint64_t chosen, int count) {
        if (aborted_) return;
        ++nodes_;
        long long* forced_sink = root_forced_;
        root_forced_ = nullptr;
        int state = propagate(covered, avail, chosen, count, forced_sink);
        if (state == kInfeasible) return;
        if (state == kComplete) {
            if (count < best_) {
                best_ = count;
                best_mask_ = chosen;
                have_best_mask_ = true;
                if (stop_at_ >= 0 && best_ <= stop_at_) aborted_ = true;
            }
            return;
        }
        if (count + 1 >= best_) return;

        uint64_t uncovered = p_.full & ~covered;
        int maxcov = 0;
        for (uint64_t m = avail; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            maxcov = std::max(maxcov, std::popcount(p_.rows[u] & uncovered));
        }
        if (maxcov == 0) return;
        int lb = count + (std::popcount(uncovered) + maxcov - 1) / maxcov;
        if (lb >= best_) return;

        int branch_v = -1, fewest = INT_MAX;
        for (uint64_t m = uncovered; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            int k = std::popcount(p_.coverers[v] & avail);
            if (k < fewest) {
                fewest = k;
                branch_v = v;
            }
        }
        uint64_t cands = p_.coverers[branch_v] & avail;
        for (uint64_t m = cands; m && !aborted_;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            avail &= ~bit(u);
            dfs(covered | p_.rows[u], avail, chosen | bit(u), count + 1);
        }
    }

    WordProblem p_;
    uint64_t best_mask_ = 0;
    uint64_t seed_mask_ = 0;
    int seed_size_ = 0;
    bool has_seed_ = false;
    bool have_best_mask_ = false;
    int best_ = 0;
    int stop_at_ = -1;
    bool aborted_ = false;
    long long nodes_ = 0;
    long long* root_forced_ = nullptr;
};

// List-based twin of WordSearch for graphs beyond 64 vertices. Rows are
// neighbor index lists; the covered set is a blocked bit row.
class WideSearch {
public:
    WideSearch(int n, const std::vector<std::vector<int>>& rows,
               const std::vector<std::vector<int>>& coverers)
        : n_(n), words_((n + 63) / 64), rows_(rows), coverers_(coverers) {}

    int run(const std::vector<char>& forced_in, const std::vector<char>& banned, int cutoff,
            int stop_at, std::vector<char>* set_out, long long* root_forced_out) {
        best_ = cutoff;
        have_best_ = false;
        stop_at_ = stop_at;
        aborted_ = false;
        root_forced_ = root_forced_out;

        std::vector<uint64_t> covered(words_, 0);
        std::vector<char> avail(n_, 1), chosen(n_, 0);
        int count = 0;
        for (int u = 0; u < n_; ++u) {
            if (banned[u]) avail[u] = 0;
            if (forced_in[u]) {
                avail[u] = 0;
                chosen[u] = 1;
                ++count;
                for (int w : rows_[u]) set_bit(covered, w);
            }
        }
        dfs(covered, avail, chosen, count);
        if (set_out && have_best_) *set_out = best_set_;
        return best_;
    }

    long long nodes() const { return nodes_; }

private:
    static void set_bit(std::vector<uint64_t>& bits, int i) { bits[i >> 6] |= bit(i & 63); }
    static bool test_bit(const std::vector<uint64_t>& bits, int i) {
        return (bits[i >> 6] >> (i & 63)) & 1;
    }

    bool all_covered(const std::vector<uint64_t>& covered) const {
        int whole = n_ >> 6;
        for (int w = 0; w < whole; ++w)
            if (covered[w] != ~uint64_t{0}) return false;
        if (n_ & 63)
            if (covered[whole] != full_mask(n_ & 63)) return false;
        return true;
    }

    int coverer_count(const std::vector<uint64_t>& covered, const std::vector<char>& avail, int v,
                      int* only) const {
        int k = 0;
        for (int u : coverers_[v]) {
            if (avail[u]) {
                ++k;
                if (only && k == 1) *only = u;
            }
        }
        (void)covered;
        return k;
    }

    void dfs(std::vector<uint64_t> covered, std::vector<char> avail, std::vector<char> chosen,
             int count) {
        if (aborted_) return;
        ++nodes_;
        long long* forced_sink = root_forced_;
        root_forced_ = nullptr;

        // unit propagation
        for (;;) {
            if (all_covered(covered)) {
                if (count < best_) {
                    best_ = count;
                    best_set_ = chosen;
                    have_best_ = true;
                    if (stop_at_ >= 0 && best_ <= stop_at_) aborted_ = true;
                }
                return;
            }
            std::vector<int> picks;
            for (int v = 0; v < n_; ++v) {
                if (test_bit(covered, v)) continue;
                int only = -1;
                int k = coverer_count(covered, avail, v, &only);
                if (k == 0) return;
                if (k == 1 && !chosen[only]) picks.push_back(only);
            }
            if (picks.empty()) break;
            std::sort(picks.begin(), picks.end());
            picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
            for (int u : picks) {
                chosen[u] = 1;
                avail[u] = 0;
                ++count;
                if (forced_sink) ++(*forced_sink);
                for (int w : rows_[u]) set_bit(covered, w);
            }
        }
        if (count + 1 >= best_) return;

        int uncovered_count = 0;
        for (int v = 0; v < n_; ++v)
            if (!test_bit(covered, v)) ++uncovered_count;
        int maxcov = 0;
        for (int u = 0; u < n_; ++u) {
            if (!avail[u]) continue;
            int c = 0;
            for (int w : rows_[u])
                if (!test_bit(covered, w)) ++c;
            maxcov = std::max(maxcov, c);
        }
        if (maxcov == 0) return;
        if (count + (uncovered_count + maxcov - 1) / maxcov >= best_) return;

        int branch_v = -1, fewest = INT_MAX;
        for (int v = 0; v < n_; ++v) {
            if (test_bit(covered, v)) continue;
            int k = coverer_count(covered, avail, v, nullptr);
            if (k < fewest) {
                fewest = k;
                branch_v = v;
            }
        }
        for (int u : coverers_[branch_v]) {
            if (aborted_) return;
            if (!avail[u]) continue;
            avail[u] = 0;
            auto covered2 = covered;
            for (int w : rows_[u]) set_bit(covered2, w);
            auto chosen2 = chosen;
            chosen2[u] = 1;
            dfs(std::move(covered2), avail, std::move(chosen2), count + 1);
        }
    }

    int n_, words_;
    const std::vector<std::vector<int>>& rows_;
    const std::vector<std::vector<int>>& coverers_;
    int best_ = 0;
    bool have_best_ = false;
    std::vector<char> best_set_;
    int stop_at_ = -1;
    bool aborted_ = false;
    long long nodes_ = 0;
    long long* root_forced_ = nullptr;
};

TDCertificate make_certificate(const Orientation& o, const std::vector<int>& set, bool total) {
    TDCertificate cert;
    cert.set = set;
    int n = o.base.n;
    cert.dominator_of.assign(n, -1);
    std::vector<char> in_set(n, 0);
    for (int u : set) in_set[u] = 1;
    for (int v = 0; v < n; ++v) {
        for (int u : o.in_neighbors(v)) {
            if (in_set[u]) {
                cert.dominator_of[v] = u;
                break;
            }
        }
        if (cert.dominator_of[v] == -1 && !total && in_set[v]) cert.dominator_of[v] = v;
    }
    return cert;
}

SolveResult solve_word(const Orientation& o, bool total) {
    auto t0 = std::chrono::steady_clock::now();
    int n = o.base.n;
    std::vector<uint64_t> rows(n), coverers(n);
    for (int v = 0; v < n; ++v) {
        rows[v] = o.out_mask(v);
        coverers[v] = o.in_mask(v);
        if (!total) {
            rows[v] |= bit(v);
            coverers[v] |= bit(v);
        }
    }
    WordProblem p{n, full_mask(n), rows.data(), coverers.data()};

    uint64_t greedy_mask = 0;
    int greedy_size = greedy_cover(p, &greedy_mask);
    WordSearch search(p);
    if (greedy_size <= n) search.seed(greedy_mask, greedy_size);
    long long root_forced = 0;
    uint64_t best_mask = 0;
    int value = search.run(0, 0, n + 1, -1, &best_mask, &root_forced);

    // tighten to the lexicographically smallest optimal set
    WordSearch probe(p);
    uint64_t fixed_in = 0, banned = 0;
    for (int u = 0; u < n && std::popcount(fixed_in) < value; ++u) {
        if (probe.run(fixed_in | bit(u), banned, value + 1, value, nullptr, nullptr) <= value)
            fixed_in |= bit(u);
        else
            banned |= bit(u);
    }

    SolveResult result;
    result.value = value;
    std::vector<int> set;
    for (uint64_t m = fixed_in; m;) {
        set.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    result.cert = make_certificate(o, set, total);
    result.stats.nodes_explored = search.nodes() + probe.nodes();
    result.stats.forced_vertices = root_forced;
    result.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

SolveResult solve_wide(const Orientation& o, bool total) {
    auto t0 = std::chrono::steady_clock::now();
    int n = o.base.n;
    std::vector<std::vector<int>> rows(n), coverers(n);
    for (int v = 0; v < n; ++v) {
        rows[v] = o.out_neighbors(v);
        coverers[v] = o.in_neighbors(v);
        if (!total) {
            rows[v].insert(std::lower_bound(rows[v].begin(), rows[v].end(), v), v);
            coverers[v].insert(std::lower_bound(coverers[v].begin(), coverers[v].end(), v), v);
        }
    }
    WideSearch search(n, rows, coverers);
    std::vector<char> none(n, 0);
    long long root_forced = 0;
    std::vector<char> best_set;
    int value = search.run(none, none, n + 1, -1, &best_set, &root_forced);

    WideSearch probe(n, rows, coverers);
    std::vector<char> fixed_in(n, 0), banned(n, 0);
    int fixed_count = 0;
    for (int u = 0; u < n && fixed_count < value; ++u) {
        fixed_in[u] = 1;
        if (probe.run(fixed_in, banned, value + 1, value, nullptr, nullptr) <= value) {
            ++fixed_count;
        } else {
            fixed_in[u] = 0;
            banned[u] = 1;
        }
    }

    SolveResult result;
    result.value = value;
    std::vector<int> set;
    for (int u = 0; u < n; ++u)
        if (fixed_in[u]) set.push_back(u);
    result.cert = make_certificate(o, set, total);
    result.stats.nodes_explored = search.nodes() + probe.nodes();
    result.stats.forced_vertices = root_forced;
    result.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace

SolveResult gamma_t(const Orientation& o) {
    int bad = zero_in_degree_vertex(o);
    if (bad != -1)
        fail(ErrorCode::NotValidOrientation, "vertex " + std::to_string(bad) + " has in-degree 0");
    if (o.base.n == 0) return {};
    return o.base.n <= 64 ? solve_word(o, true) : solve_wide(o, true);
}

SolveResult gamma(const Orientation& o) {
    if (o.base.n == 0) return {};
    return o.base.n <= 64 ? solve_word(o, false) : solve_wide(o, false);
}

namespace detail {
SolveResult gamma_t_wide(const Orientation& o) {
    int bad = zero_in_degree_vertex(o);
    if (bad != -1)
        fail(ErrorCode::NotValidOrientation, "vertex " + std::to_string(bad) + " has in-degree 0");
    if (o.base.n == 0) return {};
    return solve_wide(o, true);
}
SolveResult gamma_wide(const Orientation& o) {
    if (o.base.n == 0) return {};
    return solve_wide(o, false);
}
} // namespace detail

bool is_total_dominating(const Orientation& o, std::span<const int> s) {
    int n = o.base.n;
    std::vector<char> covered(n, 0);
    for (int u : s) {
        if (u < 0 || u >= n) fail(ErrorCode::OutOfRange, "no vertex " + std::to_string(u));
        for (int w : o.out_neighbors(u)) covered[w] = 1;
    }
    return std::find(covered.begin(), covered.end(), 0) == covered.end();
}

std::vector<int> private_neighbors(const Orientation& o, std::span<const int> s, int v) {
    int n = o.base.n;
    std::vector<char> in_set(n, 0);
    for (int u : s) {
        if (u < 0 || u >= n) fail(ErrorCode::OutOfRange, "no vertex " + std::to_string(u));
        in_set[u] = 1;
    }
    if (v < 0 || v >= n || !in_set[v])
        fail(ErrorCode::NotInSet, "vertex " + std::to_string(v) + " is not in the set");
    std::vector<int> pn;
    for (int w = 0; w < n; ++w) {
        int hits = 0;
        bool only_v = true;
        for (int u : o.in_neighbors(w)) {
            if (!in_set[u]) continue;
            ++hits;
            if (u != v) only_v = false;
        }
        if (hits == 1 && only_v) pn.push_back(w);
    }
    return pn;
}

int gamma_t_undirected(const Graph& g) {
    int n = g.n;
    if (n == 0) return 0;
    if (n <= 64) {
        std::vector<uint64_t> rows(n);
        for (int v = 0; v < n; ++v) rows[v] = g.neighbor_mask(v);
        WordProblem p{n, full_mask(n), rows.data(), rows.data()};
        uint64_t greedy_mask = 0;
        int greedy_size = greedy_cover(p, &greedy_mask);
        if (greedy_size > n) return n + 1; // isolated vertex
        WordSearch search(p);
        search.seed(greedy_mask, greedy_size);
        return search.run(0, 0, n + 1, -1, nullptr, nullptr);
    }
    std::vector<std::vector<int>> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
    WideSearch search(n, rows, rows);
    std::vector<char> none(n, 0);
    int value = search.run(none, none, n + 1, -1, nullptr, nullptr);
    return value;
}

int CoverSolver64::solve(int n, const uint64_t* rows, const uint64_t* coverers, int cutoff) {
    WordProblem p{n, full_mask(n), rows, coverers};
    uint64_t greedy_mask = 0;
    int greedy_size = greedy_cover(p, &greedy_mask);
    WordSearch search(p);
    if (greedy_size <= n) search.seed(greedy_mask, greedy_size);
    int value = search.run(0, 0, cutoff, -1, nullptr, nullptr);
    nodes_ += search.nodes();
    return value;
}

int CoverSolver64::greedy(int n, const uint64_t* rows) const {
    WordProblem p{n, full_mask(n), rows, nullptr};
    return greedy_cover(p, nullptr);
}

} // namespace orientdom
