#pragma once

#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/transversal.hpp"

namespace ramsey {

// one proof-branch decision; vertices are in the indices of the graph the
// extractor was originally handed, whatever recursion level produced the step
struct WitnessStep {
  std::string kind;
  std::vector<int> vertices;
};

struct WitnessTrace {
  Witness witness;
  std::vector<WitnessStep> steps;
};

// true iff w is a red clique on params.r vertices or a blue path on params.t
// vertices inside (g, c); never throws
bool validate_witness(const Graph& g, const EdgeColouring& c, const Witness& w,
                      const RamseyParams& params);

// constructive extractor: n >= (r-1)(t-1)+1 and min degree >= n - ceil(t/2)
// guarantee a red K_r or blue P_t in every colouring; returns one, validated,
// with the branch decisions that led to it
WitnessTrace arrow_witness(const Graph& g, const EdgeColouring& c, int r, int t);

// triangle specialisation: 2(t-1)k < n <= 2(t-1)(k+1) and min degree >=
// floor(n/2) + floor(ceil(n/2)/(k+1)) guarantee a red K_3 or blue P_t
WitnessTrace triangle_arrow_witness(const Graph& g, const EdgeColouring& c, int t, int k);

// m-partite graph on the part classes whose edges are the cross-part
// NON-edges of g; an independent transversal here is a clique in g
MultipartiteView crosspart_nonedge_view(const Graph& g, const std::vector<std::vector<int>>& parts);

// m-partite graph keeping exactly the cross-part edges of g
MultipartiteView crosspart_edge_view(const Graph& g, const std::vector<std::vector<int>>& parts);

}  // namespace ramsey
