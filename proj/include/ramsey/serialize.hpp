#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/graph.hpp"

namespace ramsey {

// colouring schema: {"n": <int>, "red": [[u, v], ...]} with u < v,
// pairs sorted lexicographically
nlohmann::json colouring_to_json(const EdgeColouring& c);
EdgeColouring colouring_from_json(std::shared_ptr<const Graph> g, const nlohmann::json& j);

// parts schema: [[v, ...], ...]
nlohmann::json parts_to_json(const std::vector<std::vector<int>>& parts);
std::vector<std::vector<int>> parts_from_json(const nlohmann::json& j);

// Graphviz output; the coloured form paints red/blue edges
std::string to_dot(const Graph& g);
std::string to_dot(const EdgeColouring& c);

}  // namespace ramsey
