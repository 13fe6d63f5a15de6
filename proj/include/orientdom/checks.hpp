#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orientdom/corpus.hpp"
#include "orientdom/orientation.hpp"

namespace orientdom {

struct CheckBudget {
    int workers = 0;
    int corpus_edge_cap = 18;        // denser corpus graphs are skipped
    long long node_budget = 10'000'000;
    int max_complete_n = 7;          // reach of the complete-graph checks
    int subset_size_cap = 9;         // grid neighborhood lemma |V(H)| cap
    int sample_count = 10;           // sampled subgraph checks per graph
    uint64_t seed = 0;
};

struct Counterexample {
    Graph graph;
    std::optional<std::vector<uint8_t>> dir; // orientation bits when relevant
    std::vector<int> vertex_set;             // offending set / vertices
};

struct CheckOutcome {
    std::string check_id;
    std::string target;
    enum class Status { Verified, Refuted, Skipped } status = Status::Verified;
    std::string detail;
    std::optional<Counterexample> counterexample; // always present when refuted
    std::map<std::string, long long> measurements; // named quantities for summaries
};

struct CheckInfo {
    std::string id;
    std::string description;
    std::string anchor;  // the claim under test, in plain ascii math
    bool per_graph;      // false: the check carries its own built-in targets
};

const std::vector<CheckInfo>& list_checks();
bool is_known_check(const std::string& check_id);

/// Runs one check against a single graph (per-graph checks) or against its
/// built-in targets (global checks, which ignore `g`).
std::vector<CheckOutcome> run_check(const std::string& check_id, const Graph& g,
                                    const CheckBudget& budget = {});

/// Global checks only; throws UnknownCheck for per-graph ones.
std::vector<CheckOutcome> run_check(const std::string& check_id, const CheckBudget& budget = {});

struct ScanSummary {
    long long graphs_processed = 0;
    long long verified = 0, refuted = 0, skipped = 0, parse_errors = 0;
    int max_gap_DOMt_minus_domt = -1;
    std::vector<std::string> domt_extremal;  // graph6 of graphs with dom_t = n-1
    std::vector<std::string> DOMt_extremal;  // graph6 of graphs with DOM_t = n-1
    std::vector<std::string> equal_extrema;  // graph6 of graphs with DOM_t = dom_t
    long long cursor = 0;                    // next corpus index
};

/// Runs the chosen per-graph checks over a corpus, emitting one outcome per
/// (graph, check). A nonempty cursor path makes the scan resumable: the last
/// processed position is persisted there and picked up on restart.
ScanSummary scan_corpus(const Corpus& corpus, const std::vector<std::string>& check_ids,
                        const CheckBudget& budget,
                        const std::function<void(const CheckOutcome&)>& emit,
                        const std::string& cursor_path = "");

} // namespace orientdom
