#pragma once

#include "homx/graph.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace homx {

/// Parses one graph6 line. A leading ">>graph6<<" header and trailing
/// whitespace are tolerated. Throws FormatError carrying the byte offset.
SimpleGraph parse_graph6(std::string_view line);

/// Standard graph6 encoding without header or newline.
std::string write_graph6(const SimpleGraph& g);

/// Reads every nonblank line; FormatError offsets are 1-based line numbers.
std::vector<SimpleGraph> read_graph6_stream(std::istream& in);

}  // namespace homx
