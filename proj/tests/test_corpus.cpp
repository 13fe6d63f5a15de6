#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <unordered_set>

#include "orientdom/corpus.hpp"
#include "orientdom/graph6.hpp"
#include "orientdom/structure.hpp"
#include "oracles.hpp"

using namespace orientdom;

namespace {

// independent class counter: every adjacency mask, canonicalized by trying
// all vertex permutations outright
long long brute_connected_classes(int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    int bits = n * (n - 1) / 2;
    auto bit_index = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        return j * (j - 1) / 2 + i;
    };
    std::unordered_set<uint64_t> classes;
    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
        // connectivity by union of adjacency
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((mask >> bit_index(i, j)) & 1) parent[find(i)] = find(j);
        bool connected = true;
        for (int i = 1; i < n; ++i)
            if (find(i) != find(0)) connected = false;
        if (!connected) continue;
        uint64_t best = ~uint64_t{0};
        for (const auto& p : perms) {
            uint64_t relabeled = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if ((mask >> bit_index(i, j)) & 1)
                        relabeled |= uint64_t{1} << bit_index(p[i], p[j]);
            best = std::min(best, relabeled);
        }
        classes.insert(best);
    }
    return static_cast<long long>(classes.size());
}

} // namespace

TEST_CASE("connected graph counts match the published sequence") {
    const long long expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) CHECK(static_cast<long long>(connected_graphs(n).size()) == expected[n]);
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n)) {
            CHECK(g.n == n);
            CHECK(is_connected(g));
        }
}

TEST_CASE("generation agrees with the brute-force classifier") {
    for (int n = 1; n <= 5; ++n)
        CHECK(static_cast<long long>(connected_graphs(n).size()) == brute_connected_classes(n));
}

TEST_CASE("representatives are pairwise non-isomorphic") {
    for (int n = 4; n <= 6; ++n) {
        std::set<uint64_t> keys;
        for (const Graph& g : connected_graphs(n)) CHECK(keys.insert(canonical_key(g)).second);
    }
}

TEST_CASE("canonical keys identify isomorphic graphs") {
    Graph a = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    Graph b = build_graph(4, {{0, 2}, {2, 1}, {1, 3}, {0, 3}});
    CHECK(isomorphic(a, b));
    Graph c = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
    CHECK_FALSE(isomorphic(a, c));
    Graph k23 = make_family(FamilySpec::complete_bipartite(2, 3));
    Graph k23_shuffled = build_graph(5, {{4, 0}, {4, 2}, {4, 3}, {1, 0}, {1, 2}, {1, 3}});
    CHECK(isomorphic(k23, k23_shuffled));
}

TEST_CASE("corpus filters") {
    Corpus corpus = Corpus::exhaustive(5);
    corpus.filter.in_c = true;
    long long count = 0;
    for_each_corpus_item(corpus, [&](const CorpusItem& item) {
        CHECK(is_connected(item.graph));
        CHECK(has_cycle(item.graph));
        ++count;
    });
    // connected cyclic graphs: subtract the trees (1 + 1 + 1 + 2 + 3) from 1+1+2+6+21
    CHECK(count == 31 - 8);

    Corpus girthy = Corpus::exhaustive(6);
    girthy.filter.in_c = true;
    girthy.filter.girth_at_least = 5;
    for_each_corpus_item(girthy, [&](const CorpusItem& item) {
        auto g = girth(item.graph);
        CHECK(g.has_value());
        CHECK(*g >= 5);
    });

    Corpus capped = Corpus::exhaustive(5);
    capped.filter.max_edges = 4;
    for_each_corpus_item(capped,
                         [&](const CorpusItem& item) { CHECK(item.graph.edge_count() <= 4); });
}

TEST_CASE("graph6 file corpus isolates malformed lines") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "orientdom_corpus_test.g6";
    {
        std::ofstream out(path);
        out << encode_graph6(make_family(FamilySpec::cycle(4))) << "\n";
        out << "this is not graph6 ~~~\n";
        out << encode_graph6(make_family(FamilySpec::complete(3))) << "\n";
    }
    Corpus corpus = Corpus::file(path.string());
    long long good = 0, bad = 0;
    for_each_corpus_item(
        corpus, [&](const CorpusItem&) { ++good; }, 0,
        [&](long long, const std::string&) { ++bad; });
    CHECK(good == 2);
    CHECK(bad == 1);
    fs::remove(path);
}

TEST_CASE("corpus resume skips already-processed items") {
    Corpus corpus = Corpus::exhaustive(4);
    std::vector<std::string> all, tail;
    long long end = for_each_corpus_item(corpus, [&](const CorpusItem& item) {
        all.push_back(item.label);
    });
    for_each_corpus_item(corpus, [&](const CorpusItem& item) { tail.push_back(item.label); }, 3);
    CHECK(all.size() == 10); // 1 + 1 + 2 + 6 representatives
    CHECK(end == 10);
    CHECK(tail.size() == all.size() - 3);
    CHECK(tail.front() == all[3]);
}

TEST_CASE("family sweep corpus") {
    Corpus corpus = Corpus::family_sweep({parse_family_spec("cycle:7"), parse_family_spec("grid:3,3"),
                                          parse_family_spec("cycleWithLeaves:1,0,0,2,0,0,0")});
    std::vector<int> sizes;
    for_each_corpus_item(corpus, [&](const CorpusItem& item) { sizes.push_back(item.graph.n); });
    CHECK(sizes == std::vector<int>{7, 9, 10});
    CHECK(corpus_spec_to_string(corpus) ==
          "sweep:cycle:7;grid:3,3;cycleWithLeaves:1,0,0,2,0,0,0");
    Corpus reparsed = parse_corpus_spec(corpus_spec_to_string(corpus));
    CHECK(reparsed.sweep.size() == 3);
}

TEST_CASE("corpus spec strings") {
    CHECK(corpus_spec_to_string(parse_corpus_spec("exhaustive:6")) == "exhaustive:6");
    CHECK(corpus_spec_to_string(parse_corpus_spec("file:/tmp/x.g6")) == "file:/tmp/x.g6");
    CHECK_THROWS_AS(parse_corpus_spec("bogus:1"), Error);
}
