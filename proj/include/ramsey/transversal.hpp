#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// a graph together with pairwise disjoint nonempty vertex classes V_1..V_m;
// the classes may cover only part of the graph
struct MultipartiteView {
  Graph graph;
  std::vector<std::vector<int>> parts;
};

// independent set picking at most one vertex from each part
struct TransversalCert {
  std::vector<int> vertices;
};

// outcome of the domination condition sweep; on failure carries one
// witnessing pair: the part index set S and the dominating set X
struct HaxellCheck {
  bool holds = false;
  std::vector<int> violating_parts;
  std::vector<int> violating_set;
};

// outcome of the non-neighbour count condition; on failure carries the
// lexicographically first violating (part i, vertex u, part j)
struct BesCheck {
  bool holds = false;
  int vertex = -1;
  int part_i = -1;
  int part_j = -1;
};

// balanced blow-up together with the projection back onto the source view
struct BlownUp {
  MultipartiteView view;
  std::vector<int> origin;  // blown-up vertex -> source vertex
};

// true iff every vertex of a has a neighbour in b (a vertex never counts as
// its own neighbour)
bool dominates(const MultipartiteView& mv, const Bitset& b, const Bitset& a);

// exhaustive check: no subset S of parts has its vertex union V_S dominated
// by 2(|S|-m+r-1) vertices of V_S; clauses with a nonpositive bound hold
// vacuously
HaxellCheck haxell_condition_holds(const MultipartiteView& mv, int r);

// exact backtracking search for an independent transversal with exactly r
// vertices; nullopt when none exists
std::optional<TransversalCert> find_independent_transversal(const MultipartiteView& mv, int r);

// defect reduction: adjoin k = m - r disjoint complete graphs K_m, one new
// vertex per part each, so a size-m transversal of the result corresponds to
// a size-r transversal of the input
MultipartiteView augment_with_clique_gadget(const MultipartiteView& mv, int r);

// checks |non-neighbours of u outside its own part| < k|A_j| for all parts i,
// vertices u in A_i, and parts j; requires exactly 2k+1 parts
BesCheck bes_condition_holds(const MultipartiteView& mv, int k);

// replace each vertex of part A_i by lcm/|A_i| copies so all parts reach the
// same size, lifting edges class-wise
BlownUp blow_up_balanced(const MultipartiteView& mv);

// first triangle with all three corners in distinct parts, ascending vertex
// order; nullopt when none exists
std::optional<std::array<int, 3>> find_multipartite_triangle(const MultipartiteView& mv);

}  // namespace ramsey
