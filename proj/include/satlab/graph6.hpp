#pragma once

#include "satlab/errors.hpp"
#include "satlab/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace satlab {

/// Decode one graph6 line (standard short format; an optional ">>graph6<<"
/// header is stripped). Throws Graph6ParseError on malformed input and
/// std::invalid_argument when the encoded n exceeds Graph::max_vertices().
Graph from_graph6(std::string_view text);

/// Encode in standard graph6 (no header, no newline).
std::string to_graph6(const Graph& g);

/// One graph per line; blank lines are skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);
void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs);

} // namespace satlab
