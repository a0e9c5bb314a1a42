#pragma once

#include <memory>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// extremal coloured instance: blue edges live inside the listed parts, red
// edges cross them, and the structure rules out both target subgraphs
struct ConstructedInstance {
  std::shared_ptr<const Graph> graph;
  EdgeColouring colouring;
  std::vector<std::vector<int>> parts;  // consecutive index ranges
  int claimed_min_degree;
};

// n = (r-1)(t-1)+1 instance: complete graph minus one complete bipartite gap
// between the last two parts; min degree n - ceil(t/2) - 1
ConstructedInstance construct_example_tight_n(int r, int t);

// banded instance on given n with (r-1)(t-1)k < n <= (r-1)(t-1)(k+1): r-1
// groups, each split into k+1 blue cliques; min degree
// n - ceil(k/(k+1) * ceil(n/(r-1))) - 1
ConstructedInstance construct_example_large_n(int r, int t, int k, int n);

}  // namespace ramsey
