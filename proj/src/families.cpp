#include "orientdom/families.hpp"

#include <algorithm>

namespace orientdom {

namespace {

[[noreturn]] void bad_params(const std::string& what) { fail(ErrorCode::InvalidFamilyParams, what); }

void need(bool ok, const std::string& what) {
    if (!ok) bad_params(what);
}

Graph make_path(int n) {
    need(n >= 1, "path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    need(n >= 3, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return build_graph(n, std::move(edges));
}

Graph make_complete(int n) {
    need(n >= 1, "complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return build_graph(n, std::move(edges));
}

Graph make_complete_bipartite(int m, int n) {
    need(m >= 1 && n >= 1, "complete bipartite needs m,n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return build_graph(m + n, std::move(edges));
}

Graph make_wheel(int n) {
    need(n >= 3, "wheel needs rim length n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n);
    return build_graph(n + 1, std::move(edges));
}

Graph make_grid(int m, int n) {
    need(m >= 1 && n >= 1, "grid needs m,n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            if (j < n) edges.emplace_back(grid_vertex(n, i, j), grid_vertex(n, i, j + 1));
            if (i < m) edges.emplace_back(grid_vertex(n, i, j), grid_vertex(n, i + 1, j));
        }
    return build_graph(m * n, std::move(edges));
}

Graph make_family_f(int k, int ell) {
    need(k >= 3, "familyF needs cycle length k >= 3");
    need(ell >= 2, "familyF needs path length l >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, k - 1);
    // path of l vertices, one leaf identified with cycle vertex 0
    int prev = 0;
    for (int t = 0; t < ell - 1; ++t) {
        edges.emplace_back(prev, k + t);
        prev = k + t;
    }
    return build_graph(k + ell - 1, std::move(edges));
}

Graph make_cycle_with_leaves(const std::vector<int>& counts) {
    int k = static_cast<int>(counts.size());
    need(k >= 3, "cycleWithLeaves needs cycle length >= 3");
    for (int c : counts) need(c >= 0, "leaf counts must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, k - 1);
    int next = k;
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < counts[i]; ++c) edges.emplace_back(i, next++);
    return build_graph(next, std::move(edges));
}

} // namespace

FamilySpec FamilySpec::cycle_with_leaves(std::vector<int> leaf_counts) {
    return {FamilyKind::CycleWithLeaves, std::move(leaf_counts), {}};
}

FamilySpec FamilySpec::product(FamilySpec a, FamilySpec b) {
    FamilySpec s{FamilyKind::CartesianProduct, {}, {}};
    s.factors.push_back(std::move(a));
    s.factors.push_back(std::move(b));
    return s;
}

Graph make_family(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto arity = [&](size_t k, const char* name) {
        need(p.size() == k, std::string(name) + " takes " + std::to_string(k) + " parameter(s)");
    };
    switch (spec.kind) {
        case FamilyKind::Path: arity(1, "path"); return make_path(p[0]);
        case FamilyKind::Cycle: arity(1, "cycle"); return make_cycle(p[0]);
        case FamilyKind::Complete: arity(1, "complete"); return make_complete(p[0]);
        case FamilyKind::CompleteBipartite: arity(2, "completeBipartite"); return make_complete_bipartite(p[0], p[1]);
        case FamilyKind::Wheel: arity(1, "wheel"); return make_wheel(p[0]);
        case FamilyKind::Grid: arity(2, "grid"); return make_grid(p[0], p[1]);
        case FamilyKind::Ladder: arity(1, "ladder"); return make_grid(2, p[0]);
        case FamilyKind::FamilyF: arity(2, "familyF"); return make_family_f(p[0], p[1]);
        case FamilyKind::CycleWithLeaves: return make_cycle_with_leaves(p);
        case FamilyKind::CartesianProduct:
            need(spec.factors.size() == 2, "product takes exactly two factors");
            return cartesian_product(make_family(spec.factors[0]), make_family(spec.factors[1]));
    }
    bad_params("unknown family kind");
}

Graph cartesian_product(const Graph& g, const Graph& h, int max_vertices) {
    if (g.n == 0 || h.n == 0) fail(ErrorCode::InvalidFamilyParams, "product factors must be nonempty");
    long long total = static_cast<long long>(g.n) * h.n;
    if (total > max_vertices)
        fail(ErrorCode::TooLarge, "product has " + std::to_string(total) + " vertices, cap is " +
                                      std::to_string(max_vertices));
    std::vector<std::pair<int, int>> edges;
    auto id = [&](int a, int b) { return a * h.n + b; };
    for (int a = 0; a < g.n; ++a)
        for (auto [b, b2] : h.edges) edges.emplace_back(id(a, b), id(a, b2));
    for (auto [a, a2] : g.edges)
        for (int b = 0; b < h.n; ++b) edges.emplace_back(id(a, b), id(a2, b));
    return build_graph(static_cast<int>(total), std::move(edges));
}

namespace {

const std::pair<const char*, FamilyKind> kFamilyNames[] = {
    {"path", FamilyKind::Path},
    {"cycle", FamilyKind::Cycle},
    {"complete", FamilyKind::Complete},
    {"completeBipartite", FamilyKind::CompleteBipartite},
    {"wheel", FamilyKind::Wheel},
    {"grid", FamilyKind::Grid},
    {"ladder", FamilyKind::Ladder},
    {"familyF", FamilyKind::FamilyF},
    {"cycleWithLeaves", FamilyKind::CycleWithLeaves},
};

FamilySpec parse_spec_at(const std::string& text, size_t& pos);

std::vector<int> parse_int_list(const std::string& text, size_t& pos) {
    std::vector<int> out;
    while (pos < text.size()) {
        size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '-'))
            ++pos;
        if (pos == start) fail(ErrorCode::ParseError, "expected integer in family spec at position " + std::to_string(pos));
        out.push_back(std::stoi(text.substr(start, pos - start)));
        // a comma continues the list only when a number follows; otherwise it
        // belongs to an enclosing product spec
        if (pos + 1 < text.size() && text[pos] == ',' &&
            (std::isdigit(static_cast<unsigned char>(text[pos + 1])) || text[pos + 1] == '-')) {
            ++pos;
            continue;
        }
        break;
    }
    return out;
}

FamilySpec parse_spec_at(const std::string& text, size_t& pos) {
    size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])))) ++pos;
    std::string name = text.substr(start, pos - start);
    if (name == "product") {
        if (pos >= text.size() || text[pos] != '(')
            fail(ErrorCode::ParseError, "product spec needs parentheses: product(a,b)");
        ++pos;
        FamilySpec a = parse_spec_at(text, pos);
        if (pos >= text.size() || text[pos] != ',') fail(ErrorCode::ParseError, "product needs two factors");
        ++pos;
        FamilySpec b = parse_spec_at(text, pos);
        if (pos >= text.size() || text[pos] != ')') fail(ErrorCode::ParseError, "unclosed product spec");
        ++pos;
        return FamilySpec::product(std::move(a), std::move(b));
    }
    for (auto [fname, kind] : kFamilyNames) {
        if (name == fname) {
            FamilySpec s{kind, {}, {}};
            if (pos < text.size() && text[pos] == ':') {
                ++pos;
                s.params = parse_int_list(text, pos);
            }
            return s;
        }
    }
    fail(ErrorCode::ParseError, "unknown family name '" + name + "'");
}

} // namespace

FamilySpec parse_family_spec(const std::string& text) {
    size_t pos = 0;
    FamilySpec s = parse_spec_at(text, pos);
    if (pos != text.size())
        fail(ErrorCode::ParseError, "trailing characters in family spec at position " + std::to_string(pos));
    return s;
}

std::string family_spec_to_string(const FamilySpec& spec) {
    if (spec.kind == FamilyKind::CartesianProduct)
        return "product(" + family_spec_to_string(spec.factors[0]) + "," +
               family_spec_to_string(spec.factors[1]) + ")";
    std::string name;
    for (auto [fname, kind] : kFamilyNames)
        if (kind == spec.kind) name = fname;
    if (spec.params.empty()) return name;
    std::string out = name + ":";
    for (size_t i = 0; i < spec.params.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(spec.params[i]);
    }
    return out;
}

} // namespace orientdom
