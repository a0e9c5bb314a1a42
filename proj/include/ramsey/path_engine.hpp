#pragma once

#include <variant>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

struct PathCert {
  std::vector<int> vertices;  // traversal order, consecutive entries adjacent
};

// vertex partition into parts that are connected components, each carrying a
// Hamiltonian cycle and floor(d/2)+1 <= |A_i| <= d-1 vertices
struct Partition {
  std::vector<std::vector<int>> parts;
  std::vector<std::vector<int>> ham_cycles;  // cyclic order per part
  int d = 0;
};

struct LongPath {
  PathCert path;  // at least d vertices
};

using DecompositionResult = std::variant<Partition, LongPath>;

// greedy two-sided extension from start, always taking the lowest-index
// eligible neighbour; the result cannot be extended at either endpoint
PathCert maximal_path(const Graph& g, int start);

// rotation step: an inextensible path whose endpoint degrees sum to at least
// its length closes into a Hamiltonian cycle of its vertex set; also asserts
// that no edges leave that set
std::vector<int> posa_close_cycle(const Graph& g, const PathCert& p);

// peel connected spans of bounded size off a graph with min degree >=
// floor(d/2); stops early with a path of exactly d vertices when one appears
DecompositionResult decompose(const Graph& g, int d);

// min degree >= floor(n/(k+1)) forces a path with >= ceil(n/k) vertices
PathCert guaranteed_long_path(const Graph& g, int k);

// exact longest path by exhaustive search; rejects graphs above the budget
PathCert longest_path_exact(const Graph& g, int budget = 24);

}  // namespace ramsey
