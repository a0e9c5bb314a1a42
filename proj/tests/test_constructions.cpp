#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ramsey/constructions.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"
#include "test_util.hpp"

using namespace ramsey;
using namespace testutil;

namespace {

// the generated colourings must dodge both target subgraphs
void check_avoids_targets(const ConstructedInstance& inst, int r, int t) {
  CHECK_FALSE(naive_has_clique(inst.colouring.red_graph(), r));
  CHECK(naive_longest_path(inst.colouring.blue_graph()) < t);
}

int tight_n(int r, int t) { return (r - 1) * (t - 1) + 1; }

}  // namespace

TEST_CASE("tight instance at r=3 t=3") {
  ConstructedInstance inst = construct_example_tight_n(3, 3);
  CHECK(inst.graph->n() == 5);
  CHECK(inst.claimed_min_degree == 2);
  CHECK(min_degree(*inst.graph) == 2);
  CHECK(inst.parts == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4}});
  CHECK(to_graph6(*inst.graph) == "D~o");

  // the only missing edges form the bipartite gap between the last two parts
  CHECK_FALSE(inst.graph->has_edge(2, 4));
  CHECK_FALSE(inst.graph->has_edge(3, 4));
  CHECK(inst.graph->edge_count() == 8);

  CHECK(inst.colouring.is_blue(0, 1));
  CHECK(inst.colouring.is_blue(2, 3));
  CHECK(inst.colouring.is_red(0, 2));
  check_avoids_targets(inst, 3, 3);
}

TEST_CASE("tight instance at r=3 t=4") {
  ConstructedInstance inst = construct_example_tight_n(3, 4);
  CHECK(inst.graph->n() == 7);
  CHECK(inst.claimed_min_degree == 4);
  CHECK(inst.parts == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}, {5, 6}});
  for (int u : {3, 4})
    for (int v : {5, 6}) CHECK_FALSE(inst.graph->has_edge(u, v));
  check_avoids_targets(inst, 3, 4);
}

TEST_CASE("tight instance at r=4 t=3") {
  ConstructedInstance inst = construct_example_tight_n(4, 3);
  CHECK(inst.graph->n() == 7);
  CHECK(inst.claimed_min_degree == 4);
  CHECK(inst.parts == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}, {6}});
  CHECK_FALSE(inst.graph->has_edge(4, 6));
  CHECK_FALSE(inst.graph->has_edge(5, 6));
  check_avoids_targets(inst, 4, 3);
}

TEST_CASE("tight degree identity across the grid") {
  for (int r = 3; r <= 8; ++r)
    for (int t = 2; t <= 10; ++t) {
      ConstructedInstance inst = construct_example_tight_n(r, t);
      int n = tight_n(r, t);
      CHECK(inst.graph->n() == n);
      CHECK(min_degree(*inst.graph) == n - (t + 1) / 2 - 1);
    }
}

TEST_CASE("tight instances avoid both targets on a small grid") {
  for (int r = 3; r <= 5; ++r)
    for (int t = 2; t <= 5; ++t) check_avoids_targets(construct_example_tight_n(r, t), r, t);
}

TEST_CASE("tight rejects out-of-regime parameters") {
  CHECK_THROWS_WITH_AS(construct_example_tight_n(2, 5), "use Dirac regime", precondition_error);
  CHECK_THROWS_WITH_AS(construct_example_tight_n(3, 1), "t must be at least 2",
                       precondition_error);
}

TEST_CASE("large instance at r=3 t=3 k=1 n=8") {
  ConstructedInstance inst = construct_example_large_n(3, 3, 1, 8);
  CHECK(inst.claimed_min_degree == 5);
  CHECK(min_degree(*inst.graph) == 5);
  CHECK(inst.parts == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}, {6, 7}});

  // blue cliques of size two, no edges across cliques inside a group
  CHECK(inst.colouring.is_blue(0, 1));
  CHECK(inst.colouring.is_blue(6, 7));
  CHECK_FALSE(inst.graph->has_edge(0, 2));
  CHECK_FALSE(inst.graph->has_edge(5, 7));
  CHECK(inst.colouring.is_red(0, 4));
  check_avoids_targets(inst, 3, 3);
}

TEST_CASE("large instance at r=3 t=3 k=1 n=5") {
  ConstructedInstance inst = construct_example_large_n(3, 3, 1, 5);
  CHECK(inst.claimed_min_degree == 2);
  CHECK(inst.parts == std::vector<std::vector<int>>{{0, 1}, {2}, {3}, {4}});
  CHECK(inst.colouring.red_edges().size() == inst.graph->edge_count() - 1);
  CHECK(inst.colouring.is_blue(0, 1));
  check_avoids_targets(inst, 3, 3);
}

TEST_CASE("large instance at r=4 t=2 k=1 n=4") {
  ConstructedInstance inst = construct_example_large_n(4, 2, 1, 4);
  CHECK(inst.claimed_min_degree == 2);
  CHECK(inst.parts == std::vector<std::vector<int>>{{0}, {1}, {2}, {3}});

  // all edges red; the within-group pair (0,1) is absent, so the red graph
  // is complete 3-partite and has no K_4
  CHECK_FALSE(inst.graph->has_edge(0, 1));
  CHECK(inst.graph->edge_count() == 5);
  CHECK(inst.colouring.red_edges().size() == 5);
  check_avoids_targets(inst, 4, 2);
}

TEST_CASE("large degree identity across every valid band up to n=60") {
  for (int r = 3; r <= 8; ++r)
    for (int t = 2; t <= 10; ++t) {
      int band = (r - 1) * (t - 1);
      for (int k = 1; band * k < 60; ++k)
        for (int n = band * k + 1; n <= band * (k + 1) && n <= 60; ++n) {
          ConstructedInstance inst = construct_example_large_n(r, t, k, n);
          int group_ceil = (n + r - 2) / (r - 1);
          int expected = n - (group_ceil * k + k) / (k + 1) - 1;
          CHECK(inst.claimed_min_degree == expected);
          CHECK(min_degree(*inst.graph) == expected);
        }
    }
}

TEST_CASE("large instances avoid both targets for small n") {
  for (int r = 3; r <= 5; ++r)
    for (int t = 2; t <= 4; ++t) {
      int band = (r - 1) * (t - 1);
      for (int k = 1; k <= 3; ++k)
        for (int n = band * k + 1; n <= band * (k + 1) && n <= 12; ++n)
          check_avoids_targets(construct_example_large_n(r, t, k, n), r, t);
    }
}

TEST_CASE("large rejects out-of-band parameters") {
  CHECK_THROWS_WITH_AS(construct_example_large_n(3, 3, 1, 4),
                       "n must satisfy (r-1)(t-1)k < n <= (r-1)(t-1)(k+1)", precondition_error);
  CHECK_THROWS_WITH_AS(construct_example_large_n(3, 3, 1, 9),
                       "n must satisfy (r-1)(t-1)k < n <= (r-1)(t-1)(k+1)", precondition_error);
  CHECK_THROWS_WITH_AS(construct_example_large_n(3, 3, 0, 5), "k must be at least 1",
                       precondition_error);
  CHECK_THROWS_WITH_AS(construct_example_large_n(2, 3, 1, 5), "use Dirac regime",
                       precondition_error);
}

TEST_CASE("blue edges stay inside parts and red edges cross them") {
  for (const ConstructedInstance& inst :
       {construct_example_tight_n(4, 4), construct_example_large_n(4, 3, 2, 14)}) {
    std::vector<int> part_of(inst.graph->n(), -1);
    for (std::size_t i = 0; i < inst.parts.size(); ++i)
      for (int v : inst.parts[i]) part_of[v] = static_cast<int>(i);
    for (auto [u, v] : inst.graph->edges()) {
      if (inst.colouring.is_blue(u, v)) CHECK(part_of[u] == part_of[v]);
      if (inst.colouring.is_red(u, v)) CHECK(part_of[u] != part_of[v]);
    }
  }
}
