#include "ramsey/path_engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

Bitset path_mask(const Graph& g, const std::vector<int>& vs) {
  Bitset on(g.n());
  for (int v : vs) on.set(v);
  return on;
}

// extend at the back, then at the front, lowest eligible neighbour first;
// stops once the path holds cap vertices
void extend_greedy(const Graph& g, std::vector<int>& path, Bitset& on, int cap) {
  while (static_cast<int>(path.size()) < cap) {
    Bitset back = g.neighbours(path.back());
    back.subtract(on);
    int w = back.find_first();
    if (w != -1) {
      path.push_back(w);
      on.set(w);
      continue;
    }
    Bitset front = g.neighbours(path.front());
    front.subtract(on);
    w = front.find_first();
    if (w == -1) break;
    path.insert(path.begin(), w);
    on.set(w);
  }
}

// pigeonhole rotation; pre: endpoint neighbourhoods lie on the path and the
// endpoint degrees sum to at least the path length
std::vector<int> rotate_to_cycle(const Graph& g, const std::vector<int>& path) {
  int len = static_cast<int>(path.size());
  if (len == 1) return path;
  if (g.has_edge(path.front(), path.back())) return path;
  // find i with u_1 ~ u_{i+1} and u_len ~ u_i (1-based positions)
  for (int i = 2; i <= len - 2; ++i) {
    if (g.has_edge(path[0], path[i]) && g.has_edge(path[len - 1], path[i - 1])) {
      std::vector<int> cycle;
      cycle.reserve(len);
      cycle.push_back(path[0]);
      for (int j = i; j < len; ++j) cycle.push_back(path[j]);
      for (int j = i - 1; j >= 1; --j) cycle.push_back(path[j]);
      return cycle;
    }
  }
  throw invariant_error("rotation chord pair missing despite the degree bound");
}

int degree_sum_of_ends(const Graph& g, const std::vector<int>& path) {
  if (path.size() == 1) return 2 * g.degree(path[0]);
  return g.degree(path.front()) + g.degree(path.back());
}

}  // namespace

PathCert maximal_path(const Graph& g, int start) {
  g.degree(start);  // range check
  std::vector<int> path{start};
  Bitset on(g.n());
  on.set(start);
  extend_greedy(g, path, on, g.n());
  return {std::move(path)};
}

std::vector<int> posa_close_cycle(const Graph& g, const PathCert& p) {
  if (p.vertices.empty()) throw precondition_error("empty path");
  const std::vector<int>& path = p.vertices;
  Bitset on = path_mask(g, path);
  if (on.count() != static_cast<int>(path.size()))
    throw precondition_error("path repeats a vertex");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.has_edge(path[i], path[i + 1])) throw precondition_error("not a path in the graph");

  Bitset ends = g.neighbours(path.front()) | g.neighbours(path.back());
  ends.subtract(on);
  if (ends.any()) throw precondition_error("path not maximal");

  if (degree_sum_of_ends(g, path) < static_cast<int>(path.size()))
    throw precondition_error("Pósa condition violated");

  std::vector<int> cycle = rotate_to_cycle(g, path);

  for (int v : path) {
    Bitset out = g.neighbours(v);
    out.subtract(on);
    if (out.any()) throw precondition_error("path not maximal");
  }
  return cycle;
}

DecompositionResult decompose(const Graph& g, int d) {
  if (d < 1) throw precondition_error("d must be at least 1");
  if (g.n() > 0 && min_degree(g) < d / 2)
    throw precondition_error("minimum degree below ⌊d/2⌋");

  Bitset remaining(g.n());
  for (int v = 0; v < g.n(); ++v) remaining.set(v);
  Partition out;
  out.d = d;

  while (remaining.any()) {
    auto [sub, lift] = induced_subgraph(g, remaining);
    std::vector<int> path{0};  // local index of the lowest remaining vertex
    Bitset on(sub.n());
    on.set(0);
    std::vector<int> cycle;
    while (true) {
      extend_greedy(sub, path, on, d);
      if (static_cast<int>(path.size()) >= d) {
        std::vector<int> lifted(path.size());
        for (std::size_t i = 0; i < path.size(); ++i) lifted[i] = lift[path[i]];
        return LongPath{PathCert{std::move(lifted)}};
      }
      // inextensible and short: close the span into a cycle, then either
      // absorb an outside neighbour through the cycle or emit the part
      if (degree_sum_of_ends(sub, path) < static_cast<int>(path.size()))
        throw invariant_error("Pósa degree bound failed inside decompose");
      cycle = rotate_to_cycle(sub, path);
      int exit_at = -1, exit_to = -1;
      for (std::size_t i = 0; i < cycle.size() && exit_at < 0; ++i) {
        Bitset outside = sub.neighbours(cycle[i]);
        outside.subtract(on);
        int w = outside.find_first();
        if (w != -1) {
          exit_at = static_cast<int>(i);
          exit_to = w;
        }
      }
      if (exit_at < 0) break;
      // break the cycle after exit_at so that vertex becomes the back end
      std::vector<int> reopened;
      reopened.reserve(cycle.size() + 1);
      for (std::size_t j = 1; j <= cycle.size(); ++j)
        reopened.push_back(cycle[(exit_at + j) % cycle.size()]);
      reopened.push_back(exit_to);
      on.set(exit_to);
      path = std::move(reopened);
    }

    std::vector<int> part, lifted_cycle;
    for (int v : path) part.push_back(lift[v]);
    for (int v : cycle) lifted_cycle.push_back(lift[v]);
    std::sort(part.begin(), part.end());
    int size = static_cast<int>(part.size());
    if (size < d / 2 + 1 || size > d - 1)
      throw invariant_error("decomposition part size " + std::to_string(size) +
                            " outside [floor(d/2)+1, d-1]");
    for (int v : part) remaining.reset(v);
    out.parts.push_back(std::move(part));
    out.ham_cycles.push_back(std::move(lifted_cycle));
  }
  return out;
}

PathCert guaranteed_long_path(const Graph& g, int k) {
  if (k < 1) throw precondition_error("k must be at least 1");
  if (g.n() == 0) throw precondition_error("empty graph");
  int n = g.n();
  int q = n / (k + 1);
  if (min_degree(g) < q) throw precondition_error("minimum degree below ⌊n/(k+1)⌋");

  int d = 2 * q + 1;
  int want = (n + k - 1) / k;  // ceil(n/k)
  if (d < want) throw invariant_error("degree band arithmetic failed: d < ceil(n/k)");

  DecompositionResult res = decompose(g, d);
  if (auto* lp = std::get_if<LongPath>(&res)) return std::move(lp->path);

  // every part is larger than n/(k+1), so there are at most k parts and the
  // largest one reaches ceil(n/k); its Hamiltonian cycle opens into the path
  auto& partition = std::get<Partition>(res);
  for (std::size_t i = 0; i < partition.parts.size(); ++i)
    if (static_cast<int>(partition.parts[i].size()) >= want)
      return PathCert{std::move(partition.ham_cycles[i])};
  throw invariant_error("no decomposition part reaches ceil(n/k)");
}

namespace {

struct ExactSearch {
  int n;
  std::vector<std::uint64_t> adj;
  std::vector<int> best, current;

  std::uint64_t reachable(int v, std::uint64_t visited) const {
    std::uint64_t seen = std::uint64_t{1} << v;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      while (frontier) {
        int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= adj[u] & ~visited & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  void dfs(int v, std::uint64_t visited) {
    if (current.size() > best.size()) best = current;
    if (static_cast<int>(best.size()) == n) return;
    // the path can only grow inside the component of v among unvisited vertices
    int room = std::popcount(reachable(v, visited & ~(std::uint64_t{1} << v)));
    if (static_cast<int>(current.size()) + room - 1 <= static_cast<int>(best.size())) return;
    std::uint64_t cand = adj[v] & ~visited;
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      current.push_back(w);
      dfs(w, visited | (std::uint64_t{1} << w));
      current.pop_back();
      if (static_cast<int>(best.size()) == n) return;
    }
  }
};

}  // namespace

PathCert longest_path_exact(const Graph& g, int budget) {
  if (g.n() > budget || g.n() > 64)
    throw budget_error("instance too large for exact search");
  if (g.n() == 0) throw precondition_error("empty graph");

  ExactSearch s;
  s.n = g.n();
  s.adj.assign(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    s.adj[u] |= std::uint64_t{1} << v;
    s.adj[v] |= std::uint64_t{1} << u;
  }
  for (int v = 0; v < g.n() && static_cast<int>(s.best.size()) < g.n(); ++v) {
    s.current = {v};
    s.dfs(v, std::uint64_t{1} << v);
  }
  return {std::move(s.best)};
}

}  // namespace ramsey
