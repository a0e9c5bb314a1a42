#include "ramsey/graph.hpp"

#include <algorithm>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw precondition_error("vertex count must be non-negative");
  adj_.assign(n, Bitset(n));
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw precondition_error("vertex " + std::to_string(v) + " out of range [0, " +
                             std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw precondition_error("self-loops are not allowed");
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return u != v && adj_[u].test(v);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return adj_[v].count();
}

const Bitset& Graph::neighbours(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> es;
  es.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].find_next(u); v != -1; v = adj_[u].find_next(v))
      es.emplace_back(u, v);
  return es;
}

int min_degree(const Graph& g) {
  if (g.n() == 0) throw precondition_error("empty graph");
  int d = g.n();
  for (int v = 0; v < g.n(); ++v) d = std::min(d, g.degree(v));
  return d;
}

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& keep) {
  if (keep.capacity() != g.n())
    throw precondition_error("vertex set capacity does not match the graph");
  std::vector<int> to_original;
  std::vector<int> to_new(g.n(), -1);
  for (int v : keep) {
    to_new[v] = static_cast<int>(to_original.size());
    to_original.push_back(v);
  }
  Graph sub(static_cast<int>(to_original.size()));
  for (int i = 0; i < sub.n(); ++i) {
    int u = to_original[i];
    for (int v : g.neighbours(u) & keep)
      if (v > u) sub.add_edge(i, to_new[v]);
  }
  return {std::move(sub), std::move(to_original)};
}

EdgeColouring::EdgeColouring(std::shared_ptr<const Graph> g,
                             const std::vector<std::pair<int, int>>& red_edges)
    : g_(std::move(g)) {
  if (!g_) throw precondition_error("colouring requires a graph");
  int n = g_->n();
  red_.assign(n, Bitset(n));
  for (auto [u, v] : red_edges) {
    if (!g_->has_edge(u, v))
      throw precondition_error("red edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") is not an edge of the graph");
    red_[u].set(v);
    red_[v].set(u);
  }
  blue_.reserve(n);
  for (int v = 0; v < n; ++v) {
    Bitset b = g_->neighbours(v);
    b.subtract(red_[v]);
    blue_.push_back(std::move(b));
  }
}

bool EdgeColouring::is_red(int u, int v) const { return g_->has_edge(u, v) && red_[u].test(v); }

bool EdgeColouring::is_blue(int u, int v) const { return g_->has_edge(u, v) && !red_[u].test(v); }

int EdgeColouring::red_degree(int v) const {
  g_->degree(v);  // range check
  return red_[v].count();
}

int EdgeColouring::blue_degree(int v) const { return g_->degree(v) - red_degree(v); }

const Bitset& EdgeColouring::red_neighbours(int v) const {
  g_->degree(v);
  return red_[v];
}

const Bitset& EdgeColouring::blue_neighbours(int v) const {
  g_->degree(v);
  return blue_[v];
}

std::vector<std::pair<int, int>> EdgeColouring::red_edges() const {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < g_->n(); ++u)
    for (int v = red_[u].find_next(u); v != -1; v = red_[u].find_next(v)) es.emplace_back(u, v);
  return es;
}

Graph EdgeColouring::red_graph() const {
  Graph r(g_->n());
  for (auto [u, v] : red_edges()) r.add_edge(u, v);
  return r;
}

Graph EdgeColouring::blue_graph() const {
  Graph b(g_->n());
  for (auto [u, v] : g_->edges())
    if (!red_[u].test(v)) b.add_edge(u, v);
  return b;
}

int colour_degree(const EdgeColouring& c, int v, Colour colour) {
  return colour == Colour::red ? c.red_degree(v) : c.blue_degree(v);
}

}  // namespace ramsey
