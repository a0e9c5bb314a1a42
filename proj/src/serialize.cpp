#include "ramsey/serialize.hpp"

#include <sstream>

#include "ramsey/errors.hpp"

namespace ramsey {

nlohmann::json colouring_to_json(const EdgeColouring& c) {
  nlohmann::json red = nlohmann::json::array();
  for (auto [u, v] : c.red_edges()) red.push_back({u, v});
  return {{"n", c.graph().n()}, {"red", red}};
}

EdgeColouring colouring_from_json(std::shared_ptr<const Graph> g, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("red"))
    throw precondition_error("colouring JSON must be {\"n\": int, \"red\": [[u, v], ...]}");
  if (j.at("n").get<int>() != g->n())
    throw precondition_error("colouring vertex count does not match the graph");
  std::vector<std::pair<int, int>> red;
  for (const auto& e : j.at("red")) {
    if (!e.is_array() || e.size() != 2)
      throw precondition_error("red entries must be [u, v] pairs");
    red.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return EdgeColouring(std::move(g), red);
}

nlohmann::json parts_to_json(const std::vector<std::vector<int>>& parts) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& p : parts) j.push_back(p);
  return j;
}

std::vector<std::vector<int>> parts_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw precondition_error("parts JSON must be an array of vertex arrays");
  std::vector<std::vector<int>> parts;
  for (const auto& p : j) {
    if (!p.is_array()) throw precondition_error("each part must be an array of vertices");
    parts.push_back(p.get<std::vector<int>>());
  }
  return parts;
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const EdgeColouring& c) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < c.graph().n(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : c.graph().edges())
    os << "  " << u << " -- " << v << " [color=" << (c.is_red(u, v) ? "red" : "blue") << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace ramsey
