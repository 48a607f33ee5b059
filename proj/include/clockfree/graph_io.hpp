#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "clockfree/graph.hpp"

namespace clockfree {

// graph6: n as one byte (n+63) for n <= 62, otherwise '~' and three bytes.
// Upper triangle column by column, six bits per byte, offset 63.
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Edge list: first line "n", then one "u v" pair per line. '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// Reads every graph in a stream. Graph6 is one graph per non-empty line;
// edge lists are separated by blank lines.
std::vector<Graph> read_graphs(std::istream& in, const std::string& format);

}  // namespace clockfree
