#pragma once

#include "homx/graph.hpp"

#include <filesystem>
#include <string_view>
#include <vector>

namespace homx::cli {

/// `ind`, `wr`, `hc:k`, `kq:q`, `kqloop:q`, or inline rows such as "01/11".
TargetGraph parse_target(std::string_view text);

/// A JSON object {"q": 2, "adj": ["01", "11"], "weights": ["1", "3/2"]}
/// (adjacency rows may also be arrays of 0/1) or inline rows as text.
TargetGraph load_target(const std::filesystem::path& file);

/// `cycle:n`, `path:n`, `star:n`, `complete:n`, `cbip:a,b` or `g6:<line>`.
SimpleGraph parse_graph(std::string_view text);

/// Every nonblank graph6 line of a file.
std::vector<SimpleGraph> load_graphs(const std::filesystem::path& file);

}  // namespace homx::cli
