#include "orientdom/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "orientdom/graph6.hpp"
#include "orientdom/structure.hpp"

namespace orientdom {

namespace {

// Backtracking minimum-key search: vertices are placed position by position
// and a candidate is pruned as soon as its partial bit string exceeds the
// best complete one.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.n) {}

    uint64_t run() {
        perm_.assign(n_, -1);
        used_.assign(n_, 0);
        best_ = ~uint64_t{0};
        place(0, 0, true);
        return best_;
    }

private:
    void place(int j, uint64_t partial, bool tight) {
        if (j == n_) {
            if (partial < best_) best_ = partial;
            return;
        }
        int start = j * (j - 1) / 2;
        for (int old = 0; old < n_; ++old) {
            if (used_[old]) continue;
            uint64_t col = 0;
            for (int i = 0; i < j; ++i) col = (col << 1) | (g_.has_edge(perm_[i], old) ? 1 : 0);
            uint64_t key = partial;
            if (j > 0) key |= col << (63 - (start + j - 1));
            bool tight2 = tight;
            if (tight && j > 0) {
                uint64_t mask = ~uint64_t{0} << (64 - (start + j));
                if ((key & mask) > (best_ & mask)) continue;
                tight2 = (key & mask) == (best_ & mask);
            }
            used_[old] = 1;
            perm_[j] = old;
            place(j + 1, key, tight2);
            used_[old] = 0;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> perm_;
    std::vector<char> used_;
    uint64_t best_ = 0;
};

} // namespace

uint64_t canonical_key(const Graph& g) {
    if (g.n > 11)
        fail(ErrorCode::TooLarge, "canonical keys support at most 11 vertices (64 adjacency bits)");
    if (g.n <= 1) return 0;
    return CanonicalSearch(g).run();
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

namespace {

std::vector<Graph> augment_by_one(const std::vector<Graph>& smaller, int n) {
    // every connected graph has a non-cut vertex, so attaching a new vertex
    // to each representative one order down reaches every class
    std::unordered_set<uint64_t> seen;
    std::vector<Graph> out;
    for (const Graph& h : smaller) {
        for (uint32_t attach = 1; attach < (1u << (n - 1)); ++attach) {
            auto edges = h.edges;
            for (int v = 0; v < n - 1; ++v)
                if ((attach >> v) & 1) edges.emplace_back(v, n - 1);
            Graph cand = build_graph(n, std::move(edges));
            if (seen.insert(canonical_key(cand)).second) out.push_back(std::move(cand));
        }
    }
    return out;
}

} // namespace

const std::vector<Graph>& connected_graphs(int n) {
    if (n < 1 || n > 9)
        fail(ErrorCode::TooLarge, "builtin exhaustive corpus covers 1 <= n <= 9");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache[1] = {build_graph(1, {})};
    for (int k = 2; k <= n; ++k)
        if (!cache.count(k)) cache[k] = augment_by_one(cache[k - 1], k);
    return cache[n];
}

Corpus Corpus::exhaustive(int max_n) {
    Corpus c;
    c.source = Source::BuiltinExhaustive;
    c.max_n = max_n;
    return c;
}

Corpus Corpus::file(std::string path) {
    Corpus c;
    c.source = Source::Graph6File;
    c.path = std::move(path);
    return c;
}

Corpus Corpus::family_sweep(std::vector<FamilySpec> specs) {
    Corpus c;
    c.source = Source::FamilySweep;
    c.sweep = std::move(specs);
    return c;
}

namespace {

bool passes(const Graph& g, const CorpusFilter& f) {
    if (g.edge_count() > f.max_edges) return false;
    if ((f.connected || f.in_c) && !is_connected(g)) return false;
    if (f.in_c && !has_cycle(g)) return false;
    if (f.girth_at_least > 0) {
        auto gir = girth(g);
        if (gir && *gir < f.girth_at_least) return false;
    }
    return true;
}

} // namespace

long long for_each_corpus_item(const Corpus& corpus,
                               const std::function<void(const CorpusItem&)>& fn,
                               long long start_index,
                               const std::function<void(long long, const std::string&)>& on_error) {
    long long index = 0;
    auto offer = [&](Graph g, std::string label) {
        if (index >= start_index && passes(g, corpus.filter))
            fn(CorpusItem{std::move(g), std::move(label), index});
        ++index;
    };
    switch (corpus.source) {
        case Corpus::Source::BuiltinExhaustive:
            for (int n = 1; n <= corpus.max_n; ++n) {
                const auto& reps = connected_graphs(n);
                for (size_t i = 0; i < reps.size(); ++i)
                    offer(reps[i], "exhaustive:n=" + std::to_string(n) + "#" + std::to_string(i));
            }
            break;
        case Corpus::Source::Graph6File: {
            std::ifstream in(corpus.path);
            if (!in) fail(ErrorCode::IoError, "cannot open corpus file " + corpus.path);
            std::string line;
            long long line_no = 0;
            while (std::getline(in, line)) {
                ++line_no;
                if (line.empty() || line == ">>graph6<<") continue;
                if (index < start_index) {
                    ++index;
                    continue;
                }
                try {
                    Graph g = parse_graph6(line);
                    offer(std::move(g), corpus.path + ":" + std::to_string(line_no));
                } catch (const Error& e) {
                    if (on_error) on_error(index, e.what());
                    ++index;
                }
            }
            break;
        }
        case Corpus::Source::FamilySweep:
            for (const auto& spec : corpus.sweep) {
                try {
                    offer(make_family(spec), family_spec_to_string(spec));
                } catch (const Error& e) {
                    if (on_error) on_error(index, e.what());
                    ++index;
                }
            }
            break;
    }
    return index;
}

Corpus parse_corpus_spec(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "exhaustive") {
        int n = rest.empty() ? 7 : std::stoi(rest);
        return Corpus::exhaustive(n);
    }
    if (head == "file") {
        if (rest.empty()) fail(ErrorCode::ParseError, "file corpus needs a path");
        return Corpus::file(rest);
    }
    if (head == "sweep") {
        std::vector<FamilySpec> specs;
        std::stringstream ss(rest);
        std::string part;
        while (std::getline(ss, part, ';'))
            if (!part.empty()) specs.push_back(parse_family_spec(part));
        if (specs.empty()) fail(ErrorCode::ParseError, "sweep corpus needs family specs");
        return Corpus::family_sweep(std::move(specs));
    }
    fail(ErrorCode::ParseError, "unknown corpus '" + text + "' (use exhaustive:N, file:PATH or sweep:...)");
}

std::string corpus_spec_to_string(const Corpus& corpus) {
    switch (corpus.source) {
        case Corpus::Source::BuiltinExhaustive: return "exhaustive:" + std::to_string(corpus.max_n);
        case Corpus::Source::Graph6File: return "file:" + corpus.path;
        case Corpus::Source::FamilySweep: {
            std::string out = "sweep:";
            for (size_t i = 0; i < corpus.sweep.size(); ++i) {
                if (i) out += ";";
                out += family_spec_to_string(corpus.sweep[i]);
            }
            return out;
        }
    }
    return "";
}

} // namespace orientdom
