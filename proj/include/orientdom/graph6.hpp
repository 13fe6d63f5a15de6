#pragma once

#include <string>
#include <string_view>

#include "orientdom/graph.hpp"

namespace orientdom {

/// Parses one line in graph6 format (bit-packed upper triangle, big-endian
/// 6-bit groups, offset-63 bytes). Supports the short form (n <= 62) and the
/// 3-byte extended form (n <= 258047). Errors carry the byte offset.
Graph parse_graph6(std::string_view line);

std::string encode_graph6(const Graph& g);

/// Text edge-list format: "n m" on the first line, then one "u v" per line.
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

/// Sniffs the format from the first line: "n m" means edge list,
/// anything else is treated as graph6.
Graph parse_graph_auto(std::string_view text);

} // namespace orientdom
