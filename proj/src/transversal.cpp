#include "ramsey/transversal.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// validates disjointness/nonemptiness/range and returns the covered union
Bitset covered_union(const MultipartiteView& mv) {
  Bitset uni(mv.graph.n());
  for (const auto& part : mv.parts) {
    if (part.empty()) throw precondition_error("view part empty");
    for (int v : part) {
      if (v < 0 || v >= mv.graph.n()) throw precondition_error("view vertex out of range");
      if (uni.test(v)) throw precondition_error("view parts overlap");
      uni.set(v);
    }
  }
  return uni;
}

void check_vertex_set(const Graph& g, const Bitset& s) {
  if (s.capacity() != g.n()) throw precondition_error("vertex set capacity mismatch");
}

std::vector<int> sorted_copy(const std::vector<int>& v) {
  std::vector<int> out = v;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool dominates(const MultipartiteView& mv, const Bitset& b, const Bitset& a) {
  check_vertex_set(mv.graph, a);
  check_vertex_set(mv.graph, b);
  for (int v : a)
    if (!mv.graph.neighbours(v).intersects(b)) return false;
  return true;
}

namespace {

struct HaxellScan {
  const MultipartiteView* mv;
  int m, r;
  std::vector<Bitset> part_mask;
  std::vector<int> s;  // current part index set, ascending
  HaxellCheck found;

  // subsets of [m] in lexicographic sequence order: {0} before {0,1} before {1}
  bool scan_parts(int next_min) {
    if (!s.empty() && test_current()) return true;
    for (int i = next_min; i < m; ++i) {
      s.push_back(i);
      if (scan_parts(i + 1)) return true;
      s.pop_back();
    }
    return false;
  }

  bool test_current() {
    int bound = 2 * (static_cast<int>(s.size()) - m + r - 1);
    if (bound <= 0) return false;
    Bitset vs(mv->graph.n());
    for (int i : s) vs |= part_mask[i];
    std::vector<int> verts(vs.begin(), vs.end());
    int total = static_cast<int>(verts.size());
    if (bound > total) return false;
    // combinations of size bound in lexicographic order
    std::vector<int> idx(bound);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Bitset x(mv->graph.n());
      for (int i : idx) x.set(verts[i]);
      if (dominates(*mv, x, vs)) {
        found.holds = false;
        found.violating_parts = s;
        for (int i : idx) found.violating_set.push_back(verts[i]);
        return true;
      }
      int p = bound - 1;
      while (p >= 0 && idx[p] == total - bound + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < bound; ++q) idx[q] = idx[q - 1] + 1;
    }
    return false;
  }
};

}  // namespace

HaxellCheck haxell_condition_holds(const MultipartiteView& mv, int r) {
  Bitset uni = covered_union(mv);
  int m = static_cast<int>(mv.parts.size());
  if (r < 1 || r > m) throw precondition_error("need 1 <= r <= number of parts");
  if (m > 6 || uni.count() > 15) throw budget_error("condition check too large");

  HaxellScan scan;
  scan.mv = &mv;
  scan.m = m;
  scan.r = r;
  for (const auto& part : mv.parts) {
    Bitset mask(mv.graph.n());
    for (int v : part) mask.set(v);
    scan.part_mask.push_back(std::move(mask));
  }
  if (scan.scan_parts(0)) return scan.found;
  return {true, {}, {}};
}

namespace {

struct TransversalSearch {
  const MultipartiteView* mv;
  int m, r;
  std::vector<std::vector<int>> part_order;  // ascending vertices per part
  std::vector<int> chosen;
  std::uint64_t nodes = 0;

  bool extend(int p, const Bitset& blocked) {
    if (static_cast<int>(chosen.size()) == r) return true;
    if (p == m || r - static_cast<int>(chosen.size()) > m - p) return false;
    if (++nodes > 10'000'000)
      throw budget_error("transversal search budget exceeded");
    for (int v : part_order[p]) {
      if (blocked.test(v)) continue;
      chosen.push_back(v);
      Bitset next = blocked;
      next |= mv->graph.neighbours(v);
      if (extend(p + 1, next)) return true;
      chosen.pop_back();
    }
    return extend(p + 1, blocked);  // skip part p
  }
};

}  // namespace

std::optional<TransversalCert> find_independent_transversal(const MultipartiteView& mv, int r) {
  covered_union(mv);
  int m = static_cast<int>(mv.parts.size());
  if (r < 1 || r > m) throw precondition_error("need 1 <= r <= number of parts");

  TransversalSearch search;
  search.mv = &mv;
  search.m = m;
  search.r = r;
  for (const auto& part : mv.parts) search.part_order.push_back(sorted_copy(part));
  if (search.extend(0, Bitset(mv.graph.n()))) return TransversalCert{std::move(search.chosen)};
  return std::nullopt;
}

MultipartiteView augment_with_clique_gadget(const MultipartiteView& mv, int r) {
  covered_union(mv);
  int m = static_cast<int>(mv.parts.size());
  if (r < 1 || r > m) throw precondition_error("need 1 <= r <= number of parts");
  int k = m - r;
  int n = mv.graph.n();

  Graph g2(n + k * m);
  for (auto [u, v] : mv.graph.edges()) g2.add_edge(u, v);
  MultipartiteView out;
  out.parts = mv.parts;
  for (int i = 0; i < k; ++i) {
    int base = n + i * m;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) g2.add_edge(base + a, base + b);
      out.parts[a].push_back(base + a);
    }
  }
  out.graph = std::move(g2);
  return out;
}

BesCheck bes_condition_holds(const MultipartiteView& mv, int k) {
  Bitset uni = covered_union(mv);
  if (k < 1) throw precondition_error("k must be at least 1");
  int m = static_cast<int>(mv.parts.size());
  if (m != 2 * k + 1) throw precondition_error("part count must be 2k+1");

  std::vector<Bitset> part_mask;
  for (const auto& part : mv.parts) {
    Bitset mask(mv.graph.n());
    for (int v : part) mask.set(v);
    part_mask.push_back(std::move(mask));
  }
  for (int i = 0; i < m; ++i) {
    for (int u : sorted_copy(mv.parts[i])) {
      Bitset rest = uni;
      rest.subtract(part_mask[i]);
      rest.subtract(mv.graph.neighbours(u));
      int non_neighbours = rest.count();
      for (int j = 0; j < m; ++j)
        if (non_neighbours >= k * static_cast<int>(mv.parts[j].size()))
          return {false, u, i, j};
    }
  }
  return {true, -1, -1, -1};
}

BlownUp blow_up_balanced(const MultipartiteView& mv) {
  covered_union(mv);
  long long big = 1;
  for (const auto& part : mv.parts) {
    big = std::lcm(big, static_cast<long long>(part.size()));
    if (big > 4096) throw budget_error("blow-up too large");
  }
  int target = static_cast<int>(big);
  int m = static_cast<int>(mv.parts.size());

  BlownUp out;
  out.view.parts.assign(m, {});
  for (int i = 0; i < m; ++i) {
    int mult = target / static_cast<int>(mv.parts[i].size());
    for (int u : mv.parts[i])
      for (int c = 0; c < mult; ++c) {
        out.view.parts[i].push_back(static_cast<int>(out.origin.size()));
        out.origin.push_back(u);
      }
  }
  int n2 = static_cast<int>(out.origin.size());
  Graph g2(n2);
  for (int x = 0; x < n2; ++x)
    for (int y = x + 1; y < n2; ++y)
      if (out.origin[x] != out.origin[y] && mv.graph.has_edge(out.origin[x], out.origin[y]))
        g2.add_edge(x, y);
  out.view.graph = std::move(g2);
  return out;
}

std::optional<std::array<int, 3>> find_multipartite_triangle(const MultipartiteView& mv) {
  covered_union(mv);
  std::vector<int> part_of(mv.graph.n(), -1);
  for (std::size_t i = 0; i < mv.parts.size(); ++i)
    for (int v : mv.parts[i]) part_of[v] = static_cast<int>(i);

  for (auto [u, v] : mv.graph.edges()) {
    if (part_of[u] < 0 || part_of[v] < 0 || part_of[u] == part_of[v]) continue;
    Bitset common = mv.graph.neighbours(u) & mv.graph.neighbours(v);
    for (int w : common) {
      if (part_of[w] < 0 || part_of[w] == part_of[u] || part_of[w] == part_of[v]) continue;
      std::array<int, 3> tri{u, v, w};
      std::sort(tri.begin(), tri.end());
      return tri;
    }
  }
  return std::nullopt;
}

}  // namespace ramsey
