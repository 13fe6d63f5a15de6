#pragma once

#include <climits>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orientdom/families.hpp"
#include "orientdom/graph.hpp"

namespace orientdom {

/// Upper-triangle adjacency bits of the lexicographically smallest vertex
/// relabeling, packed from the high end of the word. Equal keys on equal
/// vertex counts mean isomorphic; supports n <= 11.
uint64_t canonical_key(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// One representative per isomorphism class of connected graphs on n
/// vertices (counts 1, 1, 2, 6, 21, 112, 853, ... for n = 1, 2, 3, ...).
/// Generated by attaching a new vertex to every representative one order
/// down and deduplicating canonically; cached per n.
const std::vector<Graph>& connected_graphs(int n);

struct CorpusFilter {
    bool connected = false;
    bool in_c = false; // connected and contains a cycle
    int girth_at_least = 0;
    int max_edges = INT_MAX;
};

struct Corpus {
    enum class Source { BuiltinExhaustive, Graph6File, FamilySweep };
    Source source = Source::BuiltinExhaustive;
    int max_n = 7;                // BuiltinExhaustive
    std::string path;             // Graph6File
    std::vector<FamilySpec> sweep; // FamilySweep
    CorpusFilter filter;

    static Corpus exhaustive(int max_n);
    static Corpus file(std::string path);
    static Corpus family_sweep(std::vector<FamilySpec> specs);
};

struct CorpusItem {
    Graph graph;
    std::string label;
    long long index = 0; // raw position in the stream, filters notwithstanding
};

/// Streams the corpus in deterministic order. Items before `start_index`
/// are skipped cheaply (the resume path); unparsable items are reported via
/// `on_error` and the stream continues. Returns the next cursor position.
long long for_each_corpus_item(
    const Corpus& corpus, const std::function<void(const CorpusItem&)>& fn,
    long long start_index = 0,
    const std::function<void(long long, const std::string&)>& on_error = {});

/// "exhaustive:6", "file:/path/corpus.g6" or "sweep:grid:3,4;cycle:7"
Corpus parse_corpus_spec(const std::string& text);
std::string corpus_spec_to_string(const Corpus& corpus);

} // namespace orientdom
