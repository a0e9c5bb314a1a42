#include "ramsey/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ramsey/constructions.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

constexpr std::uint64_t kNoIndex = ~std::uint64_t{0};

// kernel instance reduced to the non-isolated vertices (isolated vertices can
// join no clique of order >= 2 and no path of order >= 2)
struct ReducedInstance {
  Graph sub;
  std::vector<int> to_original;
  std::vector<std::pair<int, int>> edges;  // lex edges of sub
};

ReducedInstance reduce_instance(const Graph& g, const ArrowOptions& opts) {
  Bitset keep(g.n());
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0) keep.set(v);
  if (keep.count() > 64) throw budget_error("graph too large for the enumeration kernel");

  auto [sub, map] = induced_subgraph(g, keep);
  int budget = std::min(opts.max_edges, 62);
  if (sub.edge_count() > budget)
    throw budget_error("instance too large for exhaustive enumeration; use the witness extractor instead");
  return {std::move(sub), std::move(map), {}};
}

EdgeColouring colouring_from_index(const Graph& g, const ReducedInstance& inst,
                                   std::uint64_t idx) {
  std::vector<std::pair<int, int>> red;
  for (std::size_t j = 0; j < inst.edges.size(); ++j)
    if (idx >> j & 1)
      red.emplace_back(inst.to_original[inst.edges[j].first],
                       inst.to_original[inst.edges[j].second]);
  return EdgeColouring(std::make_shared<const Graph>(g), red);
}

// trivial verdicts that bypass the kernel; r, t >= 1 assumed validated
std::optional<ArrowVerdict> trivial_verdict(const Graph& g, int r, int t) {
  if (g.n() == 0) {
    ArrowVerdict v;
    v.arrows = false;
    v.counterexample = EdgeColouring(std::make_shared<const Graph>(g), {});
    v.colourings_examined = 1;
    return v;
  }
  if (r == 1 || t == 1) return ArrowVerdict{true, std::nullopt, 0};
  return std::nullopt;
}

// incremental enumeration state: red/blue adjacency rows over <= 64 vertices,
// plus the O(1) counters that answer the t = 2 and t = 3 queries directly
struct Kernel {
  int n = 0, r = 0, t = 0, ecount = 0;
  const std::pair<int, int>* edges = nullptr;
  std::vector<std::uint64_t> adj, red, blue;
  std::vector<int> bdeg;
  int bcount = 0;  // blue edges
  int cnt2 = 0;    // vertices with blue degree >= 2

  Kernel(const ReducedInstance& inst, int r_, int t_) : n(inst.sub.n()), r(r_), t(t_) {
    ecount = static_cast<int>(inst.edges.size());
    edges = inst.edges.data();
    adj.assign(n, 0);
    for (auto [u, v] : inst.edges) {
      adj[u] |= std::uint64_t{1} << v;
      adj[v] |= std::uint64_t{1} << u;
    }
    red.assign(n, 0);
    blue.assign(n, 0);
    bdeg.assign(n, 0);
  }

  void build(std::uint64_t idx) {
    std::fill(red.begin(), red.end(), 0);
    for (int j = 0; j < ecount; ++j)
      if (idx >> j & 1) {
        auto [u, v] = edges[j];
        red[u] |= std::uint64_t{1} << v;
        red[v] |= std::uint64_t{1} << u;
      }
    bcount = 0;
    cnt2 = 0;
    for (int v = 0; v < n; ++v) {
      blue[v] = adj[v] & ~red[v];
      bdeg[v] = std::popcount(blue[v]);
      bcount += bdeg[v];
      if (bdeg[v] >= 2) ++cnt2;
    }
    bcount /= 2;
  }

  void toggle(int j) {
    auto [u, v] = edges[j];
    std::uint64_t bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
    bool was_red = red[u] & bv;
    red[u] ^= bv;
    red[v] ^= bu;
    blue[u] ^= bv;
    blue[v] ^= bu;
    int step = was_red ? 1 : -1;  // blue edge count change
    bcount += step;
    for (int x : {u, v}) {
      int before = bdeg[x];
      bdeg[x] = before + step;
      if (step > 0 && bdeg[x] == 2) ++cnt2;
      if (step < 0 && before == 2) --cnt2;
    }
  }

  bool blue_path_from(int v, std::uint64_t visited, int depth) const {
    if (depth == t) return true;
    std::uint64_t cand = blue[v] & ~visited;
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (blue_path_from(w, visited | (std::uint64_t{1} << w), depth + 1)) return true;
    }
    return false;
  }

  bool has_blue_path() const {
    if (t == 2) return bcount >= 1;
    if (t == 3) return cnt2 >= 1;
    if (bcount < t - 1) return false;
    for (int v = 0; v < n; ++v)
      if (blue[v] && blue_path_from(v, std::uint64_t{1} << v, 1)) return true;
    return false;
  }

  bool red_clique_from(std::uint64_t cand, int need) const {
    if (need == 0) return true;
    while (cand) {
      if (std::popcount(cand) < need) return false;
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      if (red_clique_from(cand & red[v], need - 1)) return true;
    }
    return false;
  }

  bool has_red_clique() const {
    if (r == 2) return bcount < ecount;
    if (r == 3) {
      for (int u = 0; u < n; ++u) {
        std::uint64_t higher = u + 1 < 64 ? red[u] >> (u + 1) << (u + 1) : 0;
        while (higher) {
          int v = std::countr_zero(higher);
          higher &= higher - 1;
          if (red[u] & red[v]) return true;
        }
      }
      return false;
    }
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return red_clique_from(all, r);
  }

  bool has_witness() const { return has_blue_path() || has_red_clique(); }
};

}  // namespace

ArrowVerdict arrows(const Graph& g, int r, int t, const ArrowOptions& opts) {
  if (r < 1 || t < 1) throw precondition_error("r and t must be at least 1");
  if (auto v = trivial_verdict(g, r, t)) return *v;

  ReducedInstance inst = reduce_instance(g, opts);
  inst.edges = inst.sub.edges();
  int ecount = static_cast<int>(inst.edges.size());
  const std::uint64_t total = std::uint64_t{1} << ecount;

  std::atomic<std::uint64_t> best{kNoIndex};
  std::atomic<std::uint64_t> examined{0};
  int nt = opts.threads > 0 ? opts.threads : omp_get_max_threads();

#pragma omp parallel num_threads(nt)
  {
    int workers = omp_get_num_threads();
    int tid = omp_get_thread_num();
    std::uint64_t chunk = total / workers, rem = total % workers;
    std::uint64_t lo = tid * chunk + std::min<std::uint64_t>(tid, rem);
    std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(tid) < rem ? 1 : 0);
    if (lo < hi) {
      Kernel kernel(inst, r, t);
      kernel.build(lo);
      std::uint64_t local = 0;
      for (std::uint64_t idx = lo; idx < hi;) {
        ++local;
        if (!kernel.has_witness()) {
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (idx < cur &&
                 !best.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
          }
          break;  // later indices in this range are all larger
        }
        ++idx;
        if (idx == hi) break;
        if ((idx & 0xFFF) == 0) {
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          if (opts.deterministic ? cur < idx : cur != kNoIndex) break;
        }
        std::uint64_t flips = (idx - 1) ^ idx;
        while (flips) {
          int j = std::countr_zero(flips);
          flips &= flips - 1;
          kernel.toggle(j);
        }
      }
      examined.fetch_add(local, std::memory_order_relaxed);
    }
  }

  ArrowVerdict verdict;
  verdict.colourings_examined = examined.load();
  std::uint64_t found = best.load();
  verdict.arrows = found == kNoIndex;
  if (!verdict.arrows) verdict.counterexample = colouring_from_index(g, inst, found);
  return verdict;
}

namespace {

// reference checks sharing no logic with the kernel: boolean matrices and
// plain recursive searches over index vectors
struct ReferenceChecks {
  int n, r, t;
  std::vector<std::vector<bool>> redm, bluem;

  bool clique_extend(std::vector<int>& cur, int from) const {
    if (static_cast<int>(cur.size()) == r) return true;
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int u : cur)
        if (!redm[u][v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(v);
      if (clique_extend(cur, v + 1)) return true;
      cur.pop_back();
    }
    return false;
  }

  bool path_extend(std::vector<int>& path, std::vector<bool>& used) const {
    if (static_cast<int>(path.size()) == t) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v] || !bluem[path.back()][v]) continue;
      used[v] = true;
      path.push_back(v);
      if (path_extend(path, used)) return true;
      path.pop_back();
      used[v] = false;
    }
    return false;
  }

  bool has_witness() const {
    for (int s = 0; s < n; ++s) {
      std::vector<int> path{s};
      std::vector<bool> used(n, false);
      used[s] = true;
      if (path_extend(path, used)) return true;
    }
    std::vector<int> cur;
    return clique_extend(cur, 0);
  }
};

}  // namespace

ArrowVerdict arrows_serial(const Graph& g, int r, int t, const ArrowOptions& opts) {
  if (r < 1 || t < 1) throw precondition_error("r and t must be at least 1");
  if (auto v = trivial_verdict(g, r, t)) return *v;

  ReducedInstance inst = reduce_instance(g, opts);
  inst.edges = inst.sub.edges();
  int ecount = static_cast<int>(inst.edges.size());
  const std::uint64_t total = std::uint64_t{1} << ecount;

  ReferenceChecks checks;
  checks.n = inst.sub.n();
  checks.r = r;
  checks.t = t;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    checks.redm.assign(checks.n, std::vector<bool>(checks.n, false));
    checks.bluem.assign(checks.n, std::vector<bool>(checks.n, false));
    for (int j = 0; j < ecount; ++j) {
      auto [u, v] = inst.edges[j];
      auto& side = (idx >> j & 1) ? checks.redm : checks.bluem;
      side[u][v] = side[v][u] = true;
    }
    if (!checks.has_witness()) {
      ArrowVerdict verdict;
      verdict.arrows = false;
      verdict.counterexample = colouring_from_index(g, inst, idx);
      verdict.colourings_examined = idx + 1;
      return verdict;
    }
  }
  return {true, std::nullopt, total};
}

int ramsey_number(int r, int t, int n_max, const ArrowOptions& opts) {
  if (r < 1 || t < 1) throw precondition_error("r and t must be at least 1");
  if (n_max < 1) throw precondition_error("n_max must be at least 1");
  for (int n = 1; n <= n_max; ++n)
    if (arrows(Graph::complete(n), r, t, opts).arrows) return n;
  throw budget_error("no n up to n_max arrows; increase n_max");
}

namespace {

int pair_bit(int u, int v) {  // u < v, lex rank among n-vertex pairs
  return v * (v - 1) / 2 + u;
}

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  return pairs;
}

// minimum adjacency mask over all vertex relabellings
std::uint64_t canonical_mask(std::uint64_t mask, int n) {
  const std::vector<std::pair<int, int>> pairs = all_pairs(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t remapped = 0;
    std::uint64_t bits = mask;
    while (bits) {
      int j = std::countr_zero(bits);
      bits &= bits - 1;
      int pu = perm[pairs[j].first], pv = perm[pairs[j].second];
      remapped |= std::uint64_t{1} << pair_bit(std::min(pu, pv), std::max(pu, pv));
    }
    best = std::min(best, remapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph graph_from_mask(std::uint64_t mask, int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (mask >> pair_bit(u, v) & 1) g.add_edge(u, v);
  return g;
}

std::vector<int> mask_degrees(std::uint64_t mask, int n) {
  std::vector<int> deg(n, 0);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (mask >> pair_bit(u, v) & 1) {
        ++deg[u];
        ++deg[v];
      }
  return deg;
}

}  // namespace

SweepReport tightness_sweep(int r, int t, int n, const ArrowOptions& opts, int samples) {
  if (r < 2 || t < 2) throw precondition_error("r and t must be at least 2");
  if (n != (r - 1) * (t - 1) + 1) throw precondition_error("n must equal (r-1)(t-1)+1");

  SweepReport report;
  report.n = n;
  report.degree_bound = n - (t + 1) / 2;

  if (n <= 7) {
    report.exhaustive = true;
    int bits = n * (n - 1) / 2;
    std::set<std::uint64_t> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      std::vector<int> deg = mask_degrees(mask, n);
      if (*std::min_element(deg.begin(), deg.end()) < report.degree_bound) continue;
      classes.insert(canonical_mask(mask, n));
    }
    for (std::uint64_t canon : classes) {
      ++report.graphs_checked;
      if (!arrows(graph_from_mask(canon, n), r, t, opts).arrows) ++report.failures;
    }
  } else {
    report.exhaustive = false;
    if (samples < 1) throw precondition_error("samples must be at least 1");
    std::mt19937_64 rng(20240617);
    int comp_cap = n - 1 - report.degree_bound;
    for (int s = 0; s < samples; ++s) {
      // random graph at the degree threshold: complement capped at
      // n-1-bound per vertex, pairs considered in shuffled order
      std::vector<std::pair<int, int>> pairs = all_pairs(n);
      std::shuffle(pairs.begin(), pairs.end(), rng);
      std::vector<int> comp_deg(n, 0);
      Graph removed(n);
      for (auto [u, v] : pairs) {
        if (comp_deg[u] >= comp_cap || comp_deg[v] >= comp_cap) continue;
        if (rng() % 2 == 0) continue;
        removed.add_edge(u, v);
        ++comp_deg[u];
        ++comp_deg[v];
      }
      Graph trimmed(n);
      for (auto [u, v] : pairs)
        if (!removed.has_edge(u, v)) trimmed.add_edge(u, v);
      ++report.graphs_checked;
      if (!arrows(trimmed, r, t, opts).arrows) ++report.failures;
    }
  }
  report.all_arrow = report.graphs_checked > 0 && report.failures == 0;

  ConstructedInstance example = construct_example_tight_n(r, t);
  report.example_min_degree = example.claimed_min_degree;
  report.example_arrows = arrows(*example.graph, r, t, opts).arrows;
  return report;
}

}  // namespace ramsey
