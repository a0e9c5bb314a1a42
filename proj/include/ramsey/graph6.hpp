#pragma once

#include <string>
#include <string_view>

#include "ramsey/graph.hpp"

namespace ramsey {

// graph6 codec (the format used by nauty and friends): one printable line per
// graph, vertex count followed by the upper-triangle adjacency bits packed
// six per byte.  parse failures throw parse_error naming the byte offset.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace ramsey
