#include <doctest.h>

#include "orientdom/graph6.hpp"
#include "oracles.hpp"

using namespace orientdom;

namespace {

// independent encoder, written before the library one: collects the column
// bits as characters, then packs them six at a time
std::string naive_graph6(const Graph& g) {
    std::string bits;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    for (size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (size_t t = 0; t < 6; ++t) value = value * 2 + (bits[k + t] - '0');
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

} // namespace

TEST_CASE("known graph6 codes") {
    Graph b = parse_graph6("B_");
    CHECK(b.n == 3);
    CHECK(b.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(encode_graph6(b) == "B_");

    Graph k3 = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(encode_graph6(k3) == "Bw");
    CHECK(parse_graph6("Bw") == k3);

    Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(encode_graph6(c4) == naive_graph6(c4));
    CHECK(parse_graph6(encode_graph6(c4)) == c4);

    Graph d = parse_graph6("D?{");
    CHECK(d.n == 5);
    CHECK(parse_graph6(encode_graph6(d)) == d);

    CHECK(parse_graph6("@") == build_graph(1, {}));
    CHECK(parse_graph6("A_") == build_graph(2, {{0, 1}}));

    // nauty-style file header is tolerated
    CHECK(parse_graph6(">>graph6<<B_") == b);
}

TEST_CASE("round trip against the independent encoder") {
    oracle::Rng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + rng.below(10);
        Graph g = oracle::random_graph(rng, n, rng.below(8));
        std::string mine = encode_graph6(g);
        CHECK(mine == naive_graph6(g));
        CHECK(parse_graph6(mine) == g);
    }
}

TEST_CASE("extended 3-byte vertex counts") {
    Graph big = build_graph(63, {{0, 1}, {10, 62}});
    std::string code = encode_graph6(big);
    CHECK(code[0] == '~');
    Graph back = parse_graph6(code);
    CHECK(back == big);
}

TEST_CASE("malformed graph6 inputs") {
    CHECK_THROWS_WITH_AS(parse_graph6(""), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_graph6("B"), doctest::Contains("byte"), Error); // payload too short
    CHECK_THROWS_WITH_AS(parse_graph6("B__"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_graph6("B\x1f"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_graph6("~~~~~~~~"), doctest::Contains("ParseError"), Error);
    // nonzero padding bits flag corrupted files
    CHECK_THROWS_WITH_AS(parse_graph6("B~"), doctest::Contains("padding"), Error);
}

TEST_CASE("edge list format and sniffing") {
    Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    std::string text = encode_edge_list(g);
    CHECK(text == "4 3\n0 1\n1 2\n2 3\n");
    CHECK(parse_edge_list(text) == g);
    CHECK(parse_graph_auto(text) == g);
    CHECK(parse_graph_auto("B_") == parse_graph6("B_"));
    CHECK_THROWS_WITH_AS(parse_edge_list("4 9\n0 1\n"), doctest::Contains("ends after"), Error);
}
