#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "ramsey/bitset.hpp"

namespace ramsey {

// simple undirected graph on vertices 0..n-1 with per-vertex neighbour bitsets;
// build with add_edge, then treat as immutable when shared across threads
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);

  int n() const { return n_; }
  int edge_count() const { return m_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  const Bitset& neighbours(int v) const;

  // (u, v) pairs with u < v, sorted lexicographically
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<Bitset> adj_;
};

// smallest vertex degree; rejects the empty graph
int min_degree(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;  // new index -> original index, ascending
};

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& keep);

enum class Colour { red, blue };

// red/blue edge colouring of a graph; stores the red side, blue is implied
class EdgeColouring {
 public:
  EdgeColouring(std::shared_ptr<const Graph> g,
                const std::vector<std::pair<int, int>>& red_edges);

  const Graph& graph() const { return *g_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return g_; }

  bool is_red(int u, int v) const;
  bool is_blue(int u, int v) const;
  int red_degree(int v) const;
  int blue_degree(int v) const;
  const Bitset& red_neighbours(int v) const;
  const Bitset& blue_neighbours(int v) const;

  // canonical (u < v) pairs, sorted lexicographically
  std::vector<std::pair<int, int>> red_edges() const;
  Graph red_graph() const;
  Graph blue_graph() const;

 private:
  std::shared_ptr<const Graph> g_;
  std::vector<Bitset> red_;
  std::vector<Bitset> blue_;
};

int colour_degree(const EdgeColouring& c, int v, Colour colour);

// certificate that a colouring contains one of the two target subgraphs
struct Witness {
  enum class Kind { red_clique, blue_path };
  Kind kind;
  std::vector<int> vertices;  // clique set, or path in traversal order
};

struct RamseyParams {
  int r = 0;  // red clique order
  int t = 0;  // blue path order
  int k = 0;  // density band index
  int s = 0;  // slack within the band
};

}  // namespace ramsey
