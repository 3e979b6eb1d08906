#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "paleytype/graph.hpp"

namespace paleytype {

/// One "u v" line per edge with u < v, lexicographic order, '\n' terminated.
std::string to_edge_list(const Graph& g);

/// Parses "u v" lines; blank lines and lines starting with '#' are skipped.
/// The order is max vertex + 1 unless `order` is given (>= 0).
/// Throws Error{Parse} on malformed lines.
Graph parse_edge_list(std::string_view text, int order = -1);

/// Standard graph6: size header N(n) then the upper triangle read column by
/// column (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, each
/// byte offset by 63. No trailing newline.
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" prefix and trailing whitespace.
Graph parse_graph6(std::string_view text);

/// Undirected DOT: vertex declarations in index order, then "u -- v;" edges.
std::string to_dot(const Graph& g);

}  // namespace paleytype
