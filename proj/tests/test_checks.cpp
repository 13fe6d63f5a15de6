#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "orientdom/checks.hpp"
#include "orientdom/graph6.hpp"
#include "orientdom/optimizer.hpp"
#include "orientdom/report.hpp"

using namespace orientdom;

namespace {

bool all_verified(const std::vector<CheckOutcome>& outcomes) {
    for (const auto& oc : outcomes)
        if (oc.status != CheckOutcome::Status::Verified) return false;
    return !outcomes.empty();
}

CheckBudget quick_budget() {
    CheckBudget b;
    b.max_complete_n = 5;
    b.subset_size_cap = 6;
    b.sample_count = 4;
    return b;
}

} // namespace

TEST_CASE("the registry lists every check with an anchor") {
    const auto& infos = list_checks();
    CHECK(infos.size() == 26);
    std::vector<std::string> ids;
    for (const auto& info : infos) {
        ids.push_back(info.id);
        CHECK_FALSE(info.description.empty());
        CHECK_FALSE(info.anchor.empty());
    }
    for (const char* id : {"obs-td-cycle", "thm-extreme-n-minus-1", "conj-spectrum-contiguous",
                           "remark-vizing-fails", "lem-K2P3-outdeg", "thm-Kn-sandwich"})
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    CHECK(is_known_check("obs-girth-bounds"));
    CHECK_FALSE(is_known_check("obs-girth"));
    CHECK_THROWS_WITH_AS(run_check("no-such-check", quick_budget()), doctest::Contains("UnknownCheck"),
                         Error);
}

TEST_CASE("global checks verify on their built-in targets") {
    CheckBudget b = quick_budget();
    CHECK(all_verified(run_check("lem-K2P3-outdeg", b)));
    CHECK(all_verified(run_check("remark-vizing-fails", b)));
    CHECK(all_verified(run_check("counterex-spanning-DOMt", b)));
    CHECK(all_verified(run_check("thm-Kn-bounds", b)));
    CHECK(all_verified(run_check("thm-Kn-sandwich", b)));
    CHECK(all_verified(run_check("thm-tournament-bound", b)));
    CHECK(all_verified(run_check("thm-ladder-DOMt", b)));
}

TEST_CASE("per-graph checks on hand-picked graphs") {
    CheckBudget b = quick_budget();
    Graph c5 = make_family(FamilySpec::cycle(5));
    CHECK(all_verified(run_check("obs-td-cycle", c5, b)));
    CHECK(all_verified(run_check("obs-girth-bounds", c5, b)));

    Graph f = make_family(FamilySpec::family_f(4, 3));
    CHECK(all_verified(run_check("prop-unicyclic", f, b)));
    CHECK(all_verified(run_check("thm-extreme-n-minus-1", f, b)));
    CHECK(all_verified(run_check("lem-max-degree-3", f, b)));

    Graph c9_leaves = make_family(FamilySpec::cycle_with_leaves({2, 0, 0, 1, 0, 0, 0, 0, 0}));
    CHECK(all_verified(run_check("thm-girth7-equiv", c9_leaves, b)));

    Graph k23 = make_family(FamilySpec::complete_bipartite(2, 3));
    CHECK(all_verified(run_check("lem-deg3-clique", k23, b)));
    CHECK(all_verified(run_check("lem-one-deg3", k23, b)));
    CHECK(all_verified(run_check("conj-spectrum-contiguous", k23, b)));
    CHECK(all_verified(run_check("conj-DOMt-remove-vertex", k23, b)));
    CHECK(all_verified(run_check("obs-DOM-vs-DOMt", k23, b)));
    CHECK(all_verified(run_check("lem-remove-vertex-domt", k23, b)));
    CHECK(all_verified(run_check("lem-remove-vertex-DOMt-exists", k23, b)));
    CHECK(all_verified(run_check("lem-induced-monotone", make_family(FamilySpec::wheel(5)), b)));
    CHECK(all_verified(run_check("thm-spanning-monotone", make_family(FamilySpec::complete(5)), b)));
}

TEST_CASE("checks skip targets outside their preconditions") {
    CheckBudget b = quick_budget();
    Graph tree = make_family(FamilySpec::path(4));
    auto outcomes = run_check("obs-td-cycle", tree, b);
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].status == CheckOutcome::Status::Skipped);

    auto not_unicyclic = run_check("prop-unicyclic", make_family(FamilySpec::complete(4)), b);
    CHECK(not_unicyclic[0].status == CheckOutcome::Status::Skipped);

    auto low_girth = run_check("thm-girth7-equiv", make_family(FamilySpec::cycle(5)), b);
    CHECK(low_girth[0].status == CheckOutcome::Status::Skipped);

    auto cycle_skip = run_check("lem-remove-vertex-DOMt-exists", make_family(FamilySpec::cycle(5)), b);
    CHECK(cycle_skip[0].status == CheckOutcome::Status::Skipped);
}

TEST_CASE("grid and ladder theorem checks") {
    CheckBudget b = quick_budget();
    auto grid = run_check("thm-grid-bounds", b);
    CHECK(all_verified(grid));
    auto ladder = run_check("thm-ladder-domt", b);
    CHECK(all_verified(ladder));
    auto nbhd = run_check("lem-grid-neighborhood", b);
    CHECK(all_verified(nbhd));
    auto bip = run_check("thm-bipartite-all", b);
    bool saw_verified = false, saw_refuted = false;
    for (const auto& oc : bip) {
        saw_verified |= oc.status == CheckOutcome::Status::Verified;
        saw_refuted |= oc.status == CheckOutcome::Status::Refuted;
    }
    CHECK(saw_verified);
    CHECK_FALSE(saw_refuted);
}

TEST_CASE("scan over the exhaustive corpus up to 5 vertices refutes nothing") {
    CheckBudget b = quick_budget();
    Corpus corpus = Corpus::exhaustive(5);
    std::vector<std::string> ids = {"obs-td-cycle",       "obs-girth-bounds",
                                    "prop-unicyclic",     "lem-remove-vertex-domt",
                                    "thm-extreme-n-minus-1", "conj-spectrum-contiguous",
                                    "conj-DOMt-remove-vertex"};
    ScanSummary summary = scan_corpus(corpus, ids, b, nullptr);
    CHECK(summary.refuted == 0);
    CHECK(summary.graphs_processed == 31);
    CHECK(summary.verified > 0);
    // the dom_t = n-1 graphs up to five vertices: K_3 = C_3, C_4, C_5 are
    // cycles (n, not n-1); the known members are K_4, K_4-e, K_{2,3} and the
    // F-members of order <= 5
    for (const auto& g6 : summary.domt_extremal) {
        Graph g = parse_graph6(g6);
        bool member = isomorphic(g, make_family(FamilySpec::complete(4))) ||
                      isomorphic(g, make_family(FamilySpec::complete_bipartite(2, 3))) ||
                      isomorphic(g, build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})) ||
                      (g.edge_count() == g.n && is_connected(g));
        CHECK(member);
    }
    CHECK(summary.max_gap_DOMt_minus_domt >= 0);
}

TEST_CASE("scan outcomes are worker-count independent") {
    Corpus corpus = Corpus::exhaustive(4);
    std::vector<std::string> ids = {"obs-girth-bounds", "conj-spectrum-contiguous"};
    RunConfig cfg;
    cfg.timing = false;
    auto run_with = [&](int workers) {
        CheckBudget b = quick_budget();
        b.workers = workers;
        std::string log;
        scan_corpus(corpus, ids, b, [&](const CheckOutcome& oc) { log += emit_check_outcome(oc, cfg); });
        return log;
    };
    CHECK(run_with(1) == run_with(2));
}

TEST_CASE("scan cursor makes reruns resumable") {
    namespace fs = std::filesystem;
    fs::path cursor = fs::temp_directory_path() / "orientdom_cursor_test";
    fs::remove(cursor);
    Corpus corpus = Corpus::exhaustive(4);
    CheckBudget b = quick_budget();
    ScanSummary first = scan_corpus(corpus, {"obs-girth-bounds"}, b, nullptr, cursor.string());
    CHECK(first.graphs_processed == 10);
    CHECK(first.cursor == 10);
    ScanSummary second = scan_corpus(corpus, {"obs-girth-bounds"}, b, nullptr, cursor.string());
    CHECK(second.graphs_processed == 0); // everything already done
    CHECK(second.cursor == 10);
    fs::remove(cursor);
}

TEST_CASE("scan isolates malformed corpus lines") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "orientdom_scan_bad.g6";
    {
        std::ofstream out(path);
        out << encode_graph6(make_family(FamilySpec::cycle(4))) << "\n";
        out << "!!!bad\n";
        out << encode_graph6(make_family(FamilySpec::cycle(5))) << "\n";
    }
    CheckBudget b = quick_budget();
    ScanSummary summary = scan_corpus(Corpus::file(path.string()), {"obs-girth-bounds"}, b, nullptr);
    CHECK(summary.parse_errors == 1);
    CHECK(summary.graphs_processed == 2);
    CHECK(summary.refuted == 0);
    fs::remove(path);
}

TEST_CASE("the vertex-removal conjecture check refutes its 6-vertex counterexample") {
    // graph Esoo: a triangle 0-1-4 with leaves 2,3 on 0, closed through a
    // new vertex 5; deleting 5 leaves a unicyclic graph with DOM_t = 3,
    // yet some valid orientation of the whole graph has gamma_t = 5
    CheckBudget b = quick_budget();
    Graph g = parse_graph6("Esoo");
    auto outcomes = run_check("conj-DOMt-remove-vertex", g, b);
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].status == CheckOutcome::Status::Refuted);
    REQUIRE(outcomes[0].counterexample.has_value());
    int v = outcomes[0].counterexample->vertex_set.at(0);
    CHECK(DOM_t(g).value > DOM_t(remove_vertex(g, v)).value + 1);
    // the sibling conjecture holds here
    CHECK(all_verified(run_check("conj-spectrum-contiguous", g, b)));
}

TEST_CASE("refutations carry replayable counterexamples") {
    // feed a deliberately false claim target: the girth-7 equivalence check
    // on a girth-7 graph that is *not* cycle-with-leaves must still verify
    // (both sides false); build one: C_7 with a pendant path of length 2
    CheckBudget b = quick_budget();
    Graph g = build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}, {0, 7}, {7, 8}});
    auto outcomes = run_check("thm-girth7-equiv", g, b);
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].status == CheckOutcome::Status::Verified);
    CHECK(outcomes[0].detail.find("false") != std::string::npos);
}
