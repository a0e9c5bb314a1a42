#include "ramsey/witness.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <utility>

#include "ramsey/errors.hpp"
#include "ramsey/path_engine.hpp"

namespace ramsey {

namespace {

bool all_distinct_in_range(const std::vector<int>& vs, int n) {
  Bitset seen(n);
  for (int v : vs) {
    if (v < 0 || v >= n || seen.test(v)) return false;
    seen.set(v);
  }
  return true;
}

std::string render_trace(const std::vector<WitnessStep>& steps) {
  std::string out = "\n  trace:";
  if (steps.empty()) out += " (empty)";
  for (const auto& step : steps) {
    out += "\n  - " + step.kind + ":";
    for (int v : step.vertices) out += " " + std::to_string(v);
  }
  return out;
}

struct ExtractionState {
  std::vector<WitnessStep> steps;
};

[[noreturn]] void fail(const ExtractionState& st, const std::string& msg) {
  throw invariant_error(msg + render_trace(st.steps));
}

std::vector<int> lift(const std::vector<int>& vs, const std::vector<int>& map) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (int v : vs) out.push_back(map[v]);
  return out;
}

std::vector<int> sorted(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  return vs;
}

// colouring of an induced subgraph inheriting colours through the index map
EdgeColouring induced_colouring(const std::shared_ptr<const Graph>& sub,
                                const std::vector<int>& to_parent, const EdgeColouring& parent) {
  std::vector<std::pair<int, int>> red;
  for (auto [a, b] : sub->edges())
    if (parent.is_red(to_parent[a], to_parent[b])) red.emplace_back(a, b);
  return EdgeColouring(sub, red);
}

Witness blue_path_prefix(const std::vector<int>& path, int t) {
  return {Witness::Kind::blue_path, std::vector<int>(path.begin(), path.begin() + t)};
}

int lowest_vertex_with_red_degree(const EdgeColouring& c, int threshold) {
  for (int u = 0; u < c.graph().n(); ++u)
    if (c.red_degree(u) >= threshold) return u;
  return -1;
}

// asserts the numeric domination chain: for every part-count s with positive
// bound 2(s-m+r-1), the bound times the maximum H-degree stays below the
// smallest possible |V_S|
void assert_haxell_chain(const MultipartiteView& h, int r, const ExtractionState& st) {
  int m = static_cast<int>(h.parts.size());
  int max_deg = 0;
  for (const auto& part : h.parts)
    for (int v : part) max_deg = std::max(max_deg, h.graph.degree(v));

  std::vector<int> sizes;
  for (const auto& part : h.parts) sizes.push_back(static_cast<int>(part.size()));
  std::sort(sizes.begin(), sizes.end());
  std::vector<long long> prefix{0};
  for (int sz : sizes) prefix.push_back(prefix.back() + sz);

  for (int s = 1; s <= m; ++s) {
    long long bound = 2LL * (s - m + r - 1);
    if (bound <= 0) continue;
    if (bound * max_deg < prefix[s]) continue;
    std::string msg = "domination chain failed at |S|=" + std::to_string(s) + ": bound " +
                      std::to_string(bound) + " * max degree " + std::to_string(max_deg) +
                      " >= " + std::to_string(prefix[s]) + " part vertices";
    try {
      HaxellCheck check = haxell_condition_holds(h, r);
      if (!check.holds) {
        msg += "; exhaustive check violated with parts {";
        for (int i : check.violating_parts) msg += " " + std::to_string(i);
        msg += " } dominated by {";
        for (int v : check.violating_set) msg += " " + std::to_string(v);
        msg += " }";
      } else {
        msg += "; exhaustive check nevertheless holds";
      }
    } catch (const budget_error&) {
      msg += "; instance too large for the exhaustive cross-check";
    }
    fail(st, msg);
  }
}

Witness extract_arrow(const Graph& g, const EdgeColouring& c, int r, int t,
                      const std::vector<int>& to_root, ExtractionState& st) {
  int n = g.n();

  if (r == 2) {
    auto reds = c.red_edges();
    if (!reds.empty()) {
      auto [u, v] = reds.front();
      std::vector<int> pair = sorted({to_root[u], to_root[v]});
      st.steps.push_back({"base-red-edge", pair});
      return {Witness::Kind::red_clique, pair};
    }
    // all edges blue: the degree bound passes to the blue graph whole and the
    // peeling loop must sweep up a Hamiltonian path
    DecompositionResult res = decompose(c.blue_graph(), n);
    auto* lp = std::get_if<LongPath>(&res);
    if (lp == nullptr) fail(st, "Dirac stage returned a partition");
    std::vector<int> ham = lift(lp->path.vertices, to_root);
    st.steps.push_back({"dirac-path", ham});
    return blue_path_prefix(ham, t);
  }

  int u = lowest_vertex_with_red_degree(c, n - t + 1);
  if (u >= 0) {
    st.steps.push_back({"high-red-degree", {to_root[u]}});
    auto [sub, map] = induced_subgraph(g, c.red_neighbours(u));
    auto shared = std::make_shared<const Graph>(std::move(sub));
    EdgeColouring subc = induced_colouring(shared, map, c);
    Witness w = extract_arrow(*shared, subc, r - 1, t, lift(map, to_root), st);
    if (w.kind == Witness::Kind::red_clique) {
      w.vertices.push_back(to_root[u]);
      w.vertices = sorted(std::move(w.vertices));
    }
    return w;
  }

  // every red degree <= n-t, so blue degrees reach floor(t/2) and the blue
  // graph decomposes with d = t
  DecompositionResult res = decompose(c.blue_graph(), t);
  if (auto* lp = std::get_if<LongPath>(&res)) {
    std::vector<int> path = lift(lp->path.vertices, to_root);
    st.steps.push_back({"long-path-escape", path});
    return blue_path_prefix(path, t);
  }

  auto& partition = std::get<Partition>(res);
  for (const auto& part : partition.parts)
    st.steps.push_back({"decomposition", lift(part, to_root)});

  MultipartiteView h = crosspart_nonedge_view(g, partition.parts);
  assert_haxell_chain(h, r, st);
  auto cert = find_independent_transversal(h, r);
  if (!cert) fail(st, "independent transversal missing despite the domination chain");
  std::vector<int> clique = sorted(lift(cert->vertices, to_root));
  st.steps.push_back({"transversal", clique});
  return {Witness::Kind::red_clique, clique};
}

Witness extract_triangle(const Graph& g, const EdgeColouring& c, int t, int k,
                         ExtractionState& st) {
  int n = g.n();
  int half_up = (n + 1) / 2;

  int u = lowest_vertex_with_red_degree(c, half_up);
  if (u >= 0) {
    st.steps.push_back({"high-red-degree", {u}});
    auto [sub, map] = induced_subgraph(g, c.red_neighbours(u));
    PathCert cert = guaranteed_long_path(sub, k);
    std::vector<int> path = lift(cert.vertices, map);
    st.steps.push_back({"guaranteed-path", path});
    if (static_cast<int>(path.size()) < t)
      fail(st, "guaranteed path has fewer than t vertices");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (c.is_red(path[i], path[i + 1]))
        return {Witness::Kind::red_clique, sorted({u, path[i], path[i + 1]})};
    return blue_path_prefix(path, t);
  }

  // every red degree <= ceil(n/2)-1, so the blue graph carries the band's
  // degree floor(ceil(n/2)/(k+1))
  int d = 2 * (half_up / (k + 1)) + 1;
  if (d < t) fail(st, "band arithmetic failed: d < t");
  DecompositionResult res = decompose(c.blue_graph(), d);
  if (auto* lp = std::get_if<LongPath>(&res)) {
    st.steps.push_back({"long-path-escape", lp->path.vertices});
    return blue_path_prefix(lp->path.vertices, t);
  }

  auto& partition = std::get<Partition>(res);
  for (const auto& part : partition.parts) st.steps.push_back({"decomposition", part});

  // a part with t or more vertices hands over a blue path straight from its
  // Hamiltonian cycle
  for (std::size_t i = 0; i < partition.parts.size(); ++i)
    if (static_cast<int>(partition.parts[i].size()) >= t) {
      const auto& cyc = partition.ham_cycles[i];
      std::vector<int> path(cyc.begin(), cyc.begin() + t);
      st.steps.push_back({"long-path-escape", path});
      return {Witness::Kind::blue_path, std::move(path)};
    }

  int m = static_cast<int>(partition.parts.size());
  if (m != 2 * k + 1)
    fail(st, "expected exactly 2k+1 = " + std::to_string(2 * k + 1) + " parts, got " +
                 std::to_string(m));

  MultipartiteView h = crosspart_edge_view(g, partition.parts);
  for (auto [x, y] : h.graph.edges())
    if (!c.is_red(x, y)) fail(st, "cross-part edge is not red");

  BesCheck bes = bes_condition_holds(h, k);
  if (!bes.holds)
    fail(st, "non-neighbour condition violated at vertex " + std::to_string(bes.vertex) +
                 " (part " + std::to_string(bes.part_i) + " against part " +
                 std::to_string(bes.part_j) + ")");
  auto tri = find_multipartite_triangle(h);
  if (!tri) fail(st, "multipartite triangle missing despite the non-neighbour condition");
  std::vector<int> clique = sorted({(*tri)[0], (*tri)[1], (*tri)[2]});
  st.steps.push_back({"multipartite-triangle", clique});
  return {Witness::Kind::red_clique, clique};
}

}  // namespace

bool validate_witness(const Graph& g, const EdgeColouring& c, const Witness& w,
                      const RamseyParams& params) {
  if (!(c.graph() == g)) return false;
  if (!all_distinct_in_range(w.vertices, g.n())) return false;

  if (w.kind == Witness::Kind::red_clique) {
    if (static_cast<int>(w.vertices.size()) != params.r) return false;
    for (std::size_t i = 0; i < w.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < w.vertices.size(); ++j) {
        if (!g.has_edge(w.vertices[i], w.vertices[j])) return false;
        if (!c.is_red(w.vertices[i], w.vertices[j])) return false;
      }
    return true;
  }

  if (static_cast<int>(w.vertices.size()) != params.t) return false;
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    if (!g.has_edge(w.vertices[i], w.vertices[i + 1])) return false;
    if (!c.is_blue(w.vertices[i], w.vertices[i + 1])) return false;
  }
  return true;
}

WitnessTrace arrow_witness(const Graph& g, const EdgeColouring& c, int r, int t) {
  if (r < 2 || t < 2) throw precondition_error("r and t must be at least 2");
  if (!(c.graph() == g)) throw precondition_error("colouring is over a different graph");
  int n = g.n();
  if (n < (r - 1) * (t - 1) + 1 || min_degree(g) < n - (t + 1) / 2)
    throw precondition_error("degree/size hypothesis not met");

  ExtractionState st;
  std::vector<int> ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  try {
    Witness w = extract_arrow(g, c, r, t, ident, st);
    if (!validate_witness(g, c, w, {r, t, 0, 0}))
      fail(st, "extracted witness failed validation");
    return {std::move(w), std::move(st.steps)};
  } catch (const precondition_error& e) {
    fail(st, std::string("proof-guaranteed step rejected its input: ") + e.what());
  }
}

WitnessTrace triangle_arrow_witness(const Graph& g, const EdgeColouring& c, int t, int k) {
  if (t < 2) throw precondition_error("t must be at least 2");
  if (k < 1) throw precondition_error("k must be at least 1");
  if (!(c.graph() == g)) throw precondition_error("colouring is over a different graph");
  int n = g.n();
  bool band_ok = 2 * (t - 1) * k < n && n <= 2 * (t - 1) * (k + 1);
  if (!band_ok || min_degree(g) < n / 2 + ((n + 1) / 2) / (k + 1))
    throw precondition_error("degree/size hypothesis not met");

  ExtractionState st;
  try {
    Witness w = extract_triangle(g, c, t, k, st);
    if (!validate_witness(g, c, w, {3, t, k, 0}))
      fail(st, "extracted witness failed validation");
    return {std::move(w), std::move(st.steps)};
  } catch (const precondition_error& e) {
    fail(st, std::string("proof-guaranteed step rejected its input: ") + e.what());
  }
}

namespace {

MultipartiteView crosspart_view(const Graph& g, const std::vector<std::vector<int>>& parts,
                                bool keep_edges) {
  std::vector<int> part_of(g.n(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i]) {
      if (v < 0 || v >= g.n()) throw precondition_error("view vertex out of range");
      if (part_of[v] != -1) throw precondition_error("view parts overlap");
      part_of[v] = static_cast<int>(i);
    }

  Graph h(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      if (part_of[u] < 0 || part_of[v] < 0 || part_of[u] == part_of[v]) continue;
      if (g.has_edge(u, v) == keep_edges) h.add_edge(u, v);
    }
  return {std::move(h), parts};
}

}  // namespace

MultipartiteView crosspart_nonedge_view(const Graph& g,
                                        const std::vector<std::vector<int>>& parts) {
  return crosspart_view(g, parts, false);
}

MultipartiteView crosspart_edge_view(const Graph& g, const std::vector<std::vector<int>>& parts) {
  return crosspart_view(g, parts, true);
}

}  // namespace ramsey
