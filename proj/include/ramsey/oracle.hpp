#pragma once

#include <cstdint>
#include <optional>

#include "ramsey/graph.hpp"

namespace ramsey {

struct ArrowOptions {
  int threads = 0;            // 0 = OpenMP default
  bool deterministic = false; // report the lowest-index counterexample
  int max_edges = 24;         // enumeration budget: at most 2^max_edges colourings
};

struct ArrowVerdict {
  bool arrows = false;
  std::optional<EdgeColouring> counterexample;  // present iff arrows == false
  std::uint64_t colourings_examined = 0;
};

// exhaustive ground truth: enumerates every red/blue colouring of g's edges
// and reports whether each one contains a red K_r or a blue P_t; edges are
// ordered lexicographically and bit j of a colouring index makes edge j red;
// workers sweep disjoint contiguous index ranges
ArrowVerdict arrows(const Graph& g, int r, int t, const ArrowOptions& opts = {});

// single-threaded reference with independent subgraph checks; rebuilds the
// colouring from its index at every step and always reports the lowest-index
// counterexample
ArrowVerdict arrows_serial(const Graph& g, int r, int t, const ArrowOptions& opts = {});

// least n <= n_max with arrows(K_n, r, t); error when no such n exists
int ramsey_number(int r, int t, int n_max, const ArrowOptions& opts = {});

struct SweepReport {
  int n = 0;
  int degree_bound = 0;                // the theorem's threshold n - ceil(t/2)
  bool exhaustive = false;             // isomorphism-deduped enumeration vs sampling
  std::uint64_t graphs_checked = 0;
  std::uint64_t failures = 0;          // graphs meeting the bound that fail to arrow
  bool all_arrow = false;
  int example_min_degree = 0;          // tight construction sits one below the bound
  bool example_arrows = true;
  bool holds() const {
    return all_arrow && !example_arrows && example_min_degree == degree_bound - 1;
  }
};

// tightness evidence at n = (r-1)(t-1)+1: every graph with min degree >=
// n - ceil(t/2) arrows, while the tight construction one degree below does not
SweepReport tightness_sweep(int r, int t, int n, const ArrowOptions& opts = {},
                            int samples = 64);

}  // namespace ramsey
