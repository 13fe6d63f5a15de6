#include "orientdom/graph6.hpp"

#include <cctype>
#include <sstream>

namespace orientdom {

namespace {

constexpr int kGraph6Bias = 63;
constexpr int kShortFormMax = 62;
constexpr int kLongFormMax = 258047; // 2^18 - 1

[[noreturn]] void parse_fail(size_t offset, const std::string& what) {
    fail(ErrorCode::ParseError, what + " (byte " + std::to_string(offset) + ")");
}

int sextet(std::string_view s, size_t i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < kGraph6Bias || c > 126) parse_fail(i, "byte out of graph6 range");
    return c - kGraph6Bias;
}

} // namespace

Graph parse_graph6(std::string_view line) {
    // nauty corpus files often start with this header
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) parse_fail(0, "empty graph6 input");

    size_t pos = 0;
    long long n;
    if (line[0] != '~') {
        n = sextet(line, 0);
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            parse_fail(1, "8-byte vertex counts not supported (n > 258047)");
        if (line.size() < 4) parse_fail(line.size(), "truncated extended vertex count");
        n = (static_cast<long long>(sextet(line, 1)) << 12) |
            (static_cast<long long>(sextet(line, 2)) << 6) | sextet(line, 3);
        pos = 4;
    }
    if (n > kLongFormMax) parse_fail(0, "vertex count too large");

    long long bits = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((bits + 5) / 6);
    if (line.size() - pos != need)
        parse_fail(line.size(),
                   "payload holds " + std::to_string(line.size() - pos) + " bytes, expected " +
                       std::to_string(need));

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0) cur = sextet(line, pos + bit / 6);
            if (cur & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
        }
    }
    if (bits % 6 != 0) {
        int pad = sextet(line, pos + need - 1) & ((1 << (6 - bits % 6)) - 1);
        if (pad != 0) parse_fail(pos + need - 1, "nonzero padding bits");
    }
    return build_graph(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    if (g.n > kLongFormMax) fail(ErrorCode::TooLarge, "graph6 supports at most 258047 vertices");
    std::string out;
    if (g.n <= kShortFormMax) {
        out.push_back(static_cast<char>(g.n + kGraph6Bias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + kGraph6Bias));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + kGraph6Bias));
        out.push_back(static_cast<char>((g.n & 63) + kGraph6Bias));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kGraph6Bias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Bias));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n, m;
    if (!(in >> n >> m)) fail(ErrorCode::ParseError, "edge list must start with \"n m\"");
    if (n < 0 || m < 0) fail(ErrorCode::ParseError, "negative counts in edge list header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long k = 0; k < m; ++k) {
        int u, v;
        if (!(in >> u >> v))
            fail(ErrorCode::ParseError, "edge list ends after " + std::to_string(k) + " of " +
                                            std::to_string(m) + " edges");
        edges.emplace_back(u, v);
    }
    return build_graph(static_cast<int>(n), std::move(edges));
}

std::string encode_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_graph_auto(std::string_view text) {
    size_t eol = text.find('\n');
    std::string_view first = text.substr(0, eol == std::string_view::npos ? text.size() : eol);
    int fields = 0;
    bool digits_only = !first.empty();
    for (size_t i = 0; i < first.size();) {
        if (std::isspace(static_cast<unsigned char>(first[i]))) {
            ++i;
            continue;
        }
        ++fields;
        while (i < first.size() && !std::isspace(static_cast<unsigned char>(first[i]))) {
            if (!std::isdigit(static_cast<unsigned char>(first[i]))) digits_only = false;
            ++i;
        }
    }
    if (digits_only && fields == 2) return parse_edge_list(text);
    return parse_graph6(first);
}

} // namespace orientdom
