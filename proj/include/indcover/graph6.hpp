#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "indcover/graph.hpp"

namespace indcover {

/// Largest order the short-form graph6 header can express.
inline constexpr int kMaxGraph6Order = 62;

/// Parses one graph6 line (no trailing newline). Throws FormatError naming the byte offset.
Graph parse_graph6(std::string_view text);

/// Throws SizeError when g.order() > 62.
std::string encode_graph6(const Graph& g);

/// Reads a graph6 corpus: one graph per line, '#' comment lines and blank lines skipped.
/// FormatError offsets are relative to the offending line; the message names the line.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace indcover
