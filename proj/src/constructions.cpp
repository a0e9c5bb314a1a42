#include "ramsey/constructions.hpp"

#include <numeric>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// sizes differing by at most one, larger sizes first
std::vector<int> near_equal_sizes(int total, int pieces) {
  std::vector<int> sizes(pieces, total / pieces);
  for (int i = 0; i < total % pieces; ++i) ++sizes[i];
  return sizes;
}

std::vector<std::vector<int>> consecutive_parts(const std::vector<int>& sizes) {
  std::vector<std::vector<int>> parts;
  int next = 0;
  for (int s : sizes) {
    std::vector<int> part(s);
    std::iota(part.begin(), part.end(), next);
    next += s;
    parts.push_back(std::move(part));
  }
  return parts;
}

// every blue edge inside a part, every red edge across parts, min degree as
// claimed; violations are bugs in the generator
void self_check(const ConstructedInstance& inst, int r, int t) {
  const Graph& g = *inst.graph;
  std::vector<int> part_of(g.n(), -1);
  for (std::size_t i = 0; i < inst.parts.size(); ++i) {
    if (static_cast<int>(inst.parts[i].size()) > t - 1)
      throw invariant_error("construction part larger than t-1");
    for (int v : inst.parts[i]) part_of[v] = static_cast<int>(i);
  }
  for (int v = 0; v < g.n(); ++v)
    if (part_of[v] < 0) throw invariant_error("construction parts do not cover the graph");
  for (auto [u, v] : g.edges()) {
    bool same = part_of[u] == part_of[v];
    if (inst.colouring.is_blue(u, v) != same)
      throw invariant_error("construction colouring does not match the part structure");
  }
  if (min_degree(g) != inst.claimed_min_degree)
    throw invariant_error("construction min degree differs from the claimed value");
  (void)r;
}

}  // namespace

ConstructedInstance construct_example_tight_n(int r, int t) {
  if (r < 3) throw precondition_error("use Dirac regime");
  if (t < 2) throw precondition_error("t must be at least 2");

  int n = (r - 1) * (t - 1) + 1;
  std::vector<int> sizes(r - 2, t - 1);
  sizes.push_back((t + 1) / 2);
  sizes.push_back(t / 2);
  auto parts = consecutive_parts(sizes);

  // complete graph minus the bipartite gap between the last two parts
  Graph g(n);
  std::vector<int> part_of(n);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i]) part_of[v] = static_cast<int>(i);
  std::vector<std::pair<int, int>> red;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool gap = (part_of[u] == r - 2 && part_of[v] == r - 1) ||
                 (part_of[u] == r - 1 && part_of[v] == r - 2);
      if (gap) continue;
      g.add_edge(u, v);
      if (part_of[u] != part_of[v]) red.emplace_back(u, v);
    }

  auto shared = std::make_shared<const Graph>(std::move(g));
  ConstructedInstance inst{shared, EdgeColouring(shared, red), std::move(parts),
                           n - (t + 1) / 2 - 1};
  self_check(inst, r, t);
  // the red graph misses the gap pair entirely, so it is (r-1)-partite
  for (int u : inst.parts[r - 2])
    for (int v : inst.parts[r - 1])
      if (inst.graph->has_edge(u, v)) throw invariant_error("bipartite gap not removed");
  return inst;
}

ConstructedInstance construct_example_large_n(int r, int t, int k, int n) {
  if (r < 3) throw precondition_error("use Dirac regime");
  if (t < 2) throw precondition_error("t must be at least 2");
  if (k < 1) throw precondition_error("k must be at least 1");
  int band = (r - 1) * (t - 1);
  if (!(band * k < n && n <= band * (k + 1)))
    throw precondition_error("n must satisfy (r-1)(t-1)k < n <= (r-1)(t-1)(k+1)");

  // r-1 near-equal groups, each split into k+1 near-equal blue cliques
  std::vector<int> group_sizes = near_equal_sizes(n, r - 1);
  std::vector<int> group_of(n), clique_of(n);
  std::vector<std::vector<int>> parts;
  int next = 0;
  for (int i = 0; i < r - 1; ++i) {
    std::vector<int> sub_sizes = near_equal_sizes(group_sizes[i], k + 1);
    for (int s : sub_sizes) {
      if (s == 0) continue;  // tiny groups leave some cliques empty
      std::vector<int> part(s);
      std::iota(part.begin(), part.end(), next);
      for (int v : part) {
        group_of[v] = i;
        clique_of[v] = static_cast<int>(parts.size());
      }
      next += s;
      parts.push_back(std::move(part));
    }
  }

  Graph g(n);
  std::vector<std::pair<int, int>> red;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (group_of[u] != group_of[v]) {
        g.add_edge(u, v);
        red.emplace_back(u, v);
      } else if (clique_of[u] == clique_of[v]) {
        g.add_edge(u, v);
      }
    }

  int group_ceil = (n + r - 2) / (r - 1);
  int claimed = n - (group_ceil * k + k) / (k + 1) - 1;

  auto shared = std::make_shared<const Graph>(std::move(g));
  ConstructedInstance inst{shared, EdgeColouring(shared, red), std::move(parts), claimed};
  self_check(inst, r, t);
  return inst;
}

}  // namespace ramsey
