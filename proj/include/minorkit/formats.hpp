#pragma once

#include <stdexcept>
#include <string>

#include "minorkit/graph.hpp"

namespace minorkit {

// Raised by the text-format parsers on malformed input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph6: the compact ASCII encoding for undirected graphs.  The header is
// n + 63 for n <= 62 or '~' followed by three 6-bit bytes for larger n; the
// payload packs the upper triangle column by column, (0,1), (0,2), (1,2),
// (0,3), ..., six bits per byte, most significant bit first, zero padded.
std::string format_graph6(const Graph & g);

// Accepts an optional ">>graph6<<" prefix and trailing newline.  Rejects a
// malformed header byte, payload bytes outside [63, 126], and payloads whose
// length does not match the header's vertex count.
Graph parse_graph6(const std::string & text);

// Plain edge-list format:
//   p <n> <m>
//   e <u> <v>     (m lines)
// Lines starting with 'c' and blank lines are ignored.
std::string format_edge_list(const Graph & g);
Graph parse_edge_list(const std::string & text);

// Reads a graph from a file, choosing the format by content: a first
// non-comment line starting with 'p' is edge-list, anything else graph6.
Graph read_graph_file(const std::string & path);
std::string read_text_file(const std::string & path);
void write_text_file(const std::string & path, const std::string & content);

} // namespace minorkit
