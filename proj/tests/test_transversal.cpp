#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ramsey/bitset.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/transversal.hpp"
#include "test_util.hpp"

using namespace ramsey;
using namespace testutil;

namespace {

Bitset set_of(int n, const std::vector<int>& vs) {
  Bitset b(n);
  for (int v : vs) b.set(v);
  return b;
}

// parts {0,1},{2,3} with the perfect matching 0-2, 1-3
MultipartiteView matching_view() {
  return {graph_from_edges(4, {{0, 2}, {1, 3}}), {{0, 1}, {2, 3}}};
}

bool transversal_is_valid(const MultipartiteView& mv, const TransversalCert& cert, int r) {
  if (cert.vertices.size() != static_cast<std::size_t>(r)) return false;
  for (std::size_t i = 0; i < cert.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < cert.vertices.size(); ++j)
      if (mv.graph.has_edge(cert.vertices[i], cert.vertices[j])) return false;
  std::set<int> used_parts;
  for (int v : cert.vertices) {
    int home = -1;
    for (std::size_t p = 0; p < mv.parts.size(); ++p)
      if (std::count(mv.parts[p].begin(), mv.parts[p].end(), v)) home = static_cast<int>(p);
    if (home < 0 || used_parts.count(home)) return false;
    used_parts.insert(home);
  }
  return true;
}

MultipartiteView random_view(std::mt19937& rng, int m, int max_part, double p) {
  std::uniform_int_distribution<int> size_pick(1, max_part);
  std::vector<std::vector<int>> parts;
  int n = 0;
  for (int i = 0; i < m; ++i) {
    std::vector<int> part;
    for (int s = size_pick(rng); s > 0; --s) part.push_back(n++);
    parts.push_back(std::move(part));
  }
  return {random_graph(rng, n, p), std::move(parts)};
}

}  // namespace

TEST_CASE("dominates checks neighbourhoods, not membership") {
  MultipartiteView star{star_graph(3), {{0}, {1}, {2}, {3}}};
  CHECK(dominates(star, set_of(4, {0}), set_of(4, {1, 2, 3})));
  CHECK_FALSE(dominates(star, set_of(4, {}), set_of(4, {0})));

  // N({2,1}) = {0,3} misses vertex 1 itself: membership does not dominate
  MultipartiteView mv = matching_view();
  CHECK_FALSE(dominates(mv, set_of(4, {2, 1}), set_of(4, {0, 1, 2, 3})));
  CHECK_THROWS_WITH_AS(dominates(mv, set_of(3, {}), set_of(4, {})),
                       "vertex set capacity mismatch", precondition_error);
}

TEST_CASE("haxell condition on the matching instance") {
  HaxellCheck check = haxell_condition_holds(matching_view(), 2);
  CHECK(check.holds);
}

TEST_CASE("haxell condition fails on adjacent singletons") {
  MultipartiteView mv{graph_from_edges(2, {{0, 1}}), {{0}, {1}}};
  HaxellCheck check = haxell_condition_holds(mv, 2);
  REQUIRE_FALSE(check.holds);
  CHECK(check.violating_parts == std::vector<int>{0, 1});
  CHECK(check.violating_set == std::vector<int>{0, 1});
}

TEST_CASE("haxell condition is vacuous when the bound is nonpositive") {
  MultipartiteView mv{Graph::complete(3), {{0, 1, 2}}};
  CHECK(haxell_condition_holds(mv, 1).holds);
}

TEST_CASE("haxell condition enforces budget and parameter ranges") {
  MultipartiteView wide{Graph(7), {{0}, {1}, {2}, {3}, {4}, {5}, {6}}};
  CHECK_THROWS_WITH_AS(haxell_condition_holds(wide, 2), "condition check too large",
                       budget_error);

  std::vector<int> a(8), b(8);
  for (int i = 0; i < 8; ++i) {
    a[i] = i;
    b[i] = 8 + i;
  }
  MultipartiteView big{Graph(16), {a, b}};
  CHECK_THROWS_WITH_AS(haxell_condition_holds(big, 2), "condition check too large", budget_error);

  MultipartiteView mv = matching_view();
  CHECK_THROWS_WITH_AS(haxell_condition_holds(mv, 0), "need 1 <= r <= number of parts",
                       precondition_error);
  CHECK_THROWS_WITH_AS(haxell_condition_holds(mv, 3), "need 1 <= r <= number of parts",
                       precondition_error);
}

TEST_CASE("view validation rejects malformed parts") {
  MultipartiteView empty_part{Graph(2), {{0}, {}}};
  CHECK_THROWS_WITH_AS(haxell_condition_holds(empty_part, 1), "view part empty",
                       precondition_error);
  MultipartiteView out_of_range{Graph(2), {{0}, {5}}};
  CHECK_THROWS_WITH_AS(haxell_condition_holds(out_of_range, 1), "view vertex out of range",
                       precondition_error);
  MultipartiteView overlap{Graph(2), {{0}, {0}}};
  CHECK_THROWS_WITH_AS(haxell_condition_holds(overlap, 1), "view parts overlap",
                       precondition_error);
}

TEST_CASE("find_independent_transversal picks the first valid choice") {
  auto cert = find_independent_transversal(matching_view(), 2);
  REQUIRE(cert.has_value());
  CHECK(cert->vertices == std::vector<int>{0, 3});

  MultipartiteView blocked{graph_from_edges(2, {{0, 1}}), {{0}, {1}}};
  CHECK_FALSE(find_independent_transversal(blocked, 2).has_value());

  MultipartiteView free{Graph(3), {{0}, {1}, {2}}};
  auto triple = find_independent_transversal(free, 3);
  REQUIRE(triple.has_value());
  CHECK(triple->vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("haxell condition implies the search succeeds") {
  std::mt19937 rng(51);
  int positive = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int m = 2 + trial % 4;
    MultipartiteView mv = random_view(rng, m, m == 5 ? 2 : 3, 0.3);
    for (int r = 2; r <= m; ++r) {
      HaxellCheck check = haxell_condition_holds(mv, r);
      if (!check.holds) continue;
      ++positive;
      auto cert = find_independent_transversal(mv, r);
      REQUIRE(cert.has_value());
      CHECK(transversal_is_valid(mv, *cert, r));
    }
  }
  CHECK(positive > 30);  // the property must actually be exercised
}

TEST_CASE("clique gadget structure at m=3 r=2") {
  std::mt19937 rng(3);
  MultipartiteView mv = random_view(rng, 3, 2, 0.4);
  int n = mv.graph.n();
  MultipartiteView aug = augment_with_clique_gadget(mv, 2);
  CHECK(aug.graph.n() == n + 3);
  REQUIRE(aug.parts.size() == 3);
  for (int a = 0; a < 3; ++a) {
    CHECK(aug.parts[a].size() == mv.parts[a].size() + 1);
    CHECK(aug.parts[a].back() == n + a);
  }
  // the gadget is a K_3 with no edges back into the original graph
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) CHECK(aug.graph.has_edge(n + a, n + b));
  for (int a = 0; a < 3; ++a)
    for (int v = 0; v < n; ++v) CHECK(aug.graph.has_edge(n + a, v) == false);
}

TEST_CASE("clique gadget is the identity at m=r") {
  MultipartiteView mv = matching_view();
  MultipartiteView aug = augment_with_clique_gadget(mv, 2);
  CHECK(aug.graph.n() == 4);
  CHECK(aug.graph.edge_count() == mv.graph.edge_count());
  CHECK(aug.parts == mv.parts);
}

TEST_CASE("clique gadget at m=4 r=2 adds two disjoint K_4s") {
  MultipartiteView mv{Graph(4), {{0}, {1}, {2}, {3}}};
  MultipartiteView aug = augment_with_clique_gadget(mv, 2);
  CHECK(aug.graph.n() == 12);
  for (int i = 0; i < 2; ++i) {
    int base = 4 + 4 * i;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) CHECK(aug.graph.has_edge(base + a, base + b));
  }
  // no edges between the two gadgets
  for (int a = 4; a < 8; ++a)
    for (int b = 8; b < 12; ++b) CHECK_FALSE(aug.graph.has_edge(a, b));
}

TEST_CASE("clique gadget preserves transversal existence") {
  std::mt19937 rng(57);
  for (int trial = 0; trial < 200; ++trial) {
    int m = 2 + trial % 4;
    MultipartiteView mv = random_view(rng, m, 3, 0.35);
    int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(m - 1));
    bool direct = find_independent_transversal(mv, r).has_value();
    MultipartiteView aug = augment_with_clique_gadget(mv, r);
    bool reduced = find_independent_transversal(aug, m).has_value();
    CHECK(direct == reduced);
  }
}

TEST_CASE("bes condition on pinned examples") {
  // complete 3-partite with parts of size 2: every cross pair is an edge
  Graph g(6);
  std::vector<std::vector<int>> parts{{0, 1}, {2, 3}, {4, 5}};
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (u / 2 != v / 2) g.add_edge(u, v);
  CHECK(bes_condition_holds({g, parts}, 1).holds);

  BesCheck bad = bes_condition_holds({Graph(3), {{0}, {1}, {2}}}, 1);
  REQUIRE_FALSE(bad.holds);
  CHECK(bad.vertex == 0);
  CHECK(bad.part_i == 0);
  CHECK(bad.part_j == 0);
}

TEST_CASE("bes condition validates its parameters") {
  MultipartiteView mv = matching_view();
  CHECK_THROWS_WITH_AS(bes_condition_holds(mv, 0), "k must be at least 1", precondition_error);
  CHECK_THROWS_WITH_AS(bes_condition_holds(mv, 1), "part count must be 2k+1", precondition_error);
}

TEST_CASE("bes condition implies a triangle") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> size_pick(2, 3);
  int tested = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::vector<int>> parts;
    int n = 0;
    for (int i = 0; i < 3; ++i) {
      std::vector<int> part;
      for (int s = size_pick(rng); s > 0; --s) part.push_back(n++);
      parts.push_back(std::move(part));
    }
    MultipartiteView mv{random_graph(rng, n, 0.85), std::move(parts)};
    BesCheck check = bes_condition_holds(mv, 1);
    if (!check.holds) continue;
    ++tested;
    auto tri = find_multipartite_triangle(mv);
    REQUIRE(tri.has_value());
  }
  CHECK(tested > 30);
}

TEST_CASE("blow_up_balanced equalizes part sizes") {
  // sizes [1,2] -> [2,2]: the singleton doubles
  MultipartiteView mv{graph_from_edges(3, {{0, 1}, {0, 2}}), {{0}, {1, 2}}};
  BlownUp up = blow_up_balanced(mv);
  REQUIRE(up.view.parts.size() == 2);
  CHECK(up.view.parts[0].size() == 2);
  CHECK(up.view.parts[1].size() == 2);
  CHECK(up.origin.size() == 4);
  // both copies of vertex 0 inherit its edges to both copies of 1 and 2
  for (int x : up.view.parts[0])
    for (int y : up.view.parts[1]) CHECK(up.view.graph.has_edge(x, y));

  // already balanced: multiplicity 1 everywhere, structure unchanged
  BlownUp flat = blow_up_balanced(matching_view());
  CHECK(flat.view.graph.n() == 4);
  CHECK(flat.view.graph.edge_count() == 2);

  // sizes [2,3] -> [6,6] with multiplicities 3 and 2
  MultipartiteView mixed{Graph(5), {{0, 1}, {2, 3, 4}}};
  BlownUp six = blow_up_balanced(mixed);
  CHECK(six.view.parts[0].size() == 6);
  CHECK(six.view.parts[1].size() == 6);
  int copies_of_0 = 0, copies_of_2 = 0;
  for (int v = 0; v < six.view.graph.n(); ++v) {
    if (six.origin[v] == 0) ++copies_of_0;
    if (six.origin[v] == 2) ++copies_of_2;
  }
  CHECK(copies_of_0 == 3);
  CHECK(copies_of_2 == 2);
}

TEST_CASE("blow-up triangles project back to source triangles") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    MultipartiteView mv = random_view(rng, 3, 3, 0.5);
    BlownUp up = blow_up_balanced(mv);
    auto tri_src = find_multipartite_triangle(mv);
    auto tri_up = find_multipartite_triangle(up.view);
    CHECK(tri_src.has_value() == tri_up.has_value());
    if (tri_up) {
      auto [x, y, z] = *tri_up;
      int a = up.origin[x], b = up.origin[y], c = up.origin[z];
      CHECK(mv.graph.has_edge(a, b));
      CHECK(mv.graph.has_edge(a, c));
      CHECK(mv.graph.has_edge(b, c));
    }
  }
}

TEST_CASE("find_multipartite_triangle on pinned instances") {
  MultipartiteView k111{Graph::complete(3), {{0}, {1}, {2}}};
  auto tri = find_multipartite_triangle(k111);
  REQUIRE(tri.has_value());
  CHECK(*tri == std::array<int, 3>{0, 1, 2});

  // two parts cannot host a triangle with corners in distinct parts
  MultipartiteView bip{Graph::complete(4), {{0, 1}, {2, 3}}};
  CHECK_FALSE(find_multipartite_triangle(bip).has_value());
}

TEST_CASE("dense balanced tripartite graphs always contain a triangle") {
  // part size 4 and cross-degree > 4 for every vertex
  std::mt19937 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g(12);
    std::vector<std::vector<int>> parts{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
    for (int u = 0; u < 12; ++u)
      for (int v = u + 1; v < 12; ++v)
        if (u / 4 != v / 4) g.add_edge(u, v);
    // carve random edges while every cross-degree stays above 4
    std::vector<std::pair<int, int>> es = g.edges();
    std::shuffle(es.begin(), es.end(), rng);
    Graph kept(12);
    std::vector<int> deg(12, 0);
    std::vector<std::pair<int, int>> removed;
    for (auto [u, v] : es) deg[u]++, deg[v]++;
    for (auto [u, v] : es) {
      if (removed.size() < 18 && deg[u] > 5 && deg[v] > 5 && rng() % 2) {
        deg[u]--, deg[v]--;
        removed.push_back({u, v});
      }
    }
    std::set<std::pair<int, int>> gone(removed.begin(), removed.end());
    for (auto [u, v] : es)
      if (!gone.count({u, v})) kept.add_edge(u, v);

    REQUIRE(min_degree(kept) > 4);
    auto tri = find_multipartite_triangle({kept, parts});
    REQUIRE(tri.has_value());
    auto [x, y, z] = *tri;
    CHECK(kept.has_edge(x, y));
    CHECK(kept.has_edge(x, z));
    CHECK(kept.has_edge(y, z));
  }
}
