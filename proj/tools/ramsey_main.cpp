#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/constructions.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/path_engine.hpp"
#include "ramsey/serialize.hpp"
#include "ramsey/transversal.hpp"
#include "ramsey/witness.hpp"

namespace {

using nlohmann::json;

std::string slurp_stream(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string slurp(const std::string& path) {
  if (path == "-") return slurp_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw ramsey::precondition_error("cannot open " + path);
  return slurp_stream(in);
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == '\n' || s[i] == '\r' || s[i] == ' ')) ++i;
  return s.substr(i);
}

// a graph arrives either inline (--g6) or as a file / stdin (--graph)
struct GraphInput {
  std::string literal;
  std::string path;

  void attach(CLI::App* sub) {
    auto* a = sub->add_option("--g6", literal, "graph6 literal");
    auto* b = sub->add_option("--graph", path, "graph6 file, or - for stdin");
    a->excludes(b);
  }

  ramsey::Graph load() const {
    if (!literal.empty()) return ramsey::parse_graph6(literal);
    if (path.empty()) throw CLI::RequiredError("--g6 or --graph");
    return ramsey::parse_graph6(trimmed(slurp(path)));
  }
};

// JSON arguments accept an inline literal, a file path, or - for stdin
json load_json_arg(const std::string& value) {
  std::string text = value;
  if (!(value.size() > 0 && (value[0] == '[' || value[0] == '{'))) text = slurp(value);
  return json::parse(text);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json vertices_json(const std::vector<int>& vs) { return json(vs); }

json trace_json(const ramsey::WitnessTrace& tr) {
  json steps = json::array();
  for (const auto& s : tr.steps) steps.push_back({{"kind", s.kind}, {"vertices", s.vertices}});
  const char* kind =
      tr.witness.kind == ramsey::Witness::Kind::red_clique ? "red_clique" : "blue_path";
  return {{"kind", kind}, {"vertices", tr.witness.vertices}, {"steps", steps}};
}

int run_construct(const std::string& example, int r, int t, int k, int n,
                  const std::string& format) {
  ramsey::ConstructedInstance ci = [&] {
    if (example == "tight") return ramsey::construct_example_tight_n(r, t);
    if (n == 0) throw CLI::RequiredError("--n (with --example large)");
    return ramsey::construct_example_large_n(r, t, k, n);
  }();
  if (format == "g6") {
    std::cout << ramsey::to_graph6(*ci.graph) << "\n";
  } else if (format == "dot") {
    std::cout << ramsey::to_dot(ci.colouring);
  } else {
    emit({{"graph6", ramsey::to_graph6(*ci.graph)},
          {"colouring", ramsey::colouring_to_json(ci.colouring)},
          {"parts", ramsey::parts_to_json(ci.parts)},
          {"min_degree", ci.claimed_min_degree}});
  }
  return 0;
}

int run_decompose(const GraphInput& gi, int d) {
  ramsey::Graph g = gi.load();
  ramsey::DecompositionResult res = ramsey::decompose(g, d);
  if (const auto* part = std::get_if<ramsey::Partition>(&res)) {
    emit({{"kind", "partition"},
          {"d", part->d},
          {"parts", ramsey::parts_to_json(part->parts)},
          {"ham_cycles", ramsey::parts_to_json(part->ham_cycles)}});
  } else {
    emit({{"kind", "long_path"}, {"path", std::get<ramsey::LongPath>(res).path.vertices}});
  }
  return 0;
}

int run_transversal(const GraphInput& gi, const std::string& parts_arg, int r) {
  ramsey::MultipartiteView mv{gi.load(), ramsey::parts_from_json(load_json_arg(parts_arg))};
  ramsey::HaxellCheck check = ramsey::haxell_condition_holds(mv, r);
  json out = {{"haxell_holds", check.holds},
              {"violating_parts", nullptr},
              {"violating_set", nullptr},
              {"transversal", nullptr}};
  if (!check.holds) {
    out["violating_parts"] = vertices_json(check.violating_parts);
    out["violating_set"] = vertices_json(check.violating_set);
  }
  if (auto cert = ramsey::find_independent_transversal(mv, r)) {
    out["transversal"] = vertices_json(cert->vertices);
  }
  emit(out);
  return 0;
}

int run_witness(const GraphInput& gi, const std::string& colouring_arg, int r, int t, int k) {
  auto g = std::make_shared<const ramsey::Graph>(gi.load());
  ramsey::EdgeColouring c = ramsey::colouring_from_json(g, load_json_arg(colouring_arg));
  ramsey::WitnessTrace tr;
  if (k > 0) {
    if (r != 3) throw ramsey::precondition_error("--k applies only to r = 3");
    tr = ramsey::triangle_arrow_witness(*g, c, t, k);
  } else {
    tr = ramsey::arrow_witness(*g, c, r, t);
  }
  emit(trace_json(tr));
  return 0;
}

int run_oracle(const GraphInput& gi, int r, int t, const ramsey::ArrowOptions& opts) {
  ramsey::Graph g = gi.load();
  ramsey::ArrowVerdict v = ramsey::arrows(g, r, t, opts);
  json out = {{"arrows", v.arrows},
              {"colourings_examined", v.colourings_examined},
              {"counterexample", nullptr}};
  if (v.counterexample) out["counterexample"] = ramsey::colouring_to_json(*v.counterexample);
  emit(out);
  return v.arrows ? 0 : 1;
}

int run_sweep(int r, int t, int n, int samples, const ramsey::ArrowOptions& opts) {
  if (n == 0) n = (r - 1) * (t - 1) + 1;
  ramsey::SweepReport rep = ramsey::tightness_sweep(r, t, n, opts, samples);
  emit({{"n", rep.n},
        {"degree_bound", rep.degree_bound},
        {"exhaustive", rep.exhaustive},
        {"graphs_checked", rep.graphs_checked},
        {"failures", rep.failures},
        {"all_arrow", rep.all_arrow},
        {"example_min_degree", rep.example_min_degree},
        {"example_arrows", rep.example_arrows},
        {"holds", rep.holds()}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certificate toolkit for Ramsey goodness of paths"};
  app.require_subcommand(1);
  int exit_code = 0;

  // construct
  auto* construct = app.add_subcommand("construct", "emit an extremal coloured instance");
  std::string example = "tight";
  std::string format = "json";
  int cr = 0, ct = 0, ck = 1, cn = 0;
  construct->add_option("--example", example, "tight | large")
      ->check(CLI::IsMember({"tight", "large"}));
  construct->add_option("--r", cr, "clique order")->required();
  construct->add_option("--t", ct, "path order")->required();
  construct->add_option("--k", ck, "multiplicity band (large)");
  construct->add_option("--n", cn, "vertex count (large)");
  construct->add_option("--format", format, "json | g6 | dot")
      ->check(CLI::IsMember({"json", "g6", "dot"}));
  construct->callback([&] { exit_code = run_construct(example, cr, ct, ck, cn, format); });

  // decompose
  auto* decompose = app.add_subcommand("decompose", "bounded-part path decomposition");
  GraphInput dg;
  int dd = 0;
  dg.attach(decompose);
  decompose->add_option("--d", dd, "part size bound")->required();
  decompose->callback([&] { exit_code = run_decompose(dg, dd); });

  // transversal
  auto* transversal = app.add_subcommand("transversal", "independent transversal check + search");
  GraphInput tg;
  std::string parts_arg;
  int tr = 0;
  tg.attach(transversal);
  transversal->add_option("--parts", parts_arg, "parts JSON (inline, file, or -)")->required();
  transversal->add_option("--r", tr, "transversal size")->required();
  transversal->callback([&] { exit_code = run_transversal(tg, parts_arg, tr); });

  // witness
  auto* witness = app.add_subcommand("witness", "extract a red clique or blue path");
  GraphInput wg;
  std::string colouring_arg;
  int wr = 0, wt = 0, wk = 0;
  wg.attach(witness);
  witness->add_option("--colouring", colouring_arg, "colouring JSON (inline, file, or -)")
      ->required();
  witness->add_option("--r", wr, "clique order")->required();
  witness->add_option("--t", wt, "path order")->required();
  witness->add_option("--k", wk, "multiplicity band (triangle regime)");
  witness->callback([&] { exit_code = run_witness(wg, colouring_arg, wr, wt, wk); });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive arrow check over all 2-colourings");
  GraphInput og;
  int orr = 0, ot = 0;
  ramsey::ArrowOptions oopts;
  og.attach(oracle);
  oracle->add_option("--r", orr, "clique order")->required();
  oracle->add_option("--t", ot, "path order")->required();
  oracle->add_option("--threads", oopts.threads, "worker count (0 = all cores)");
  oracle->add_option("--max-edges", oopts.max_edges, "enumeration budget");
  oracle->add_flag("--deterministic", oopts.deterministic, "lowest-index counterexample");
  oracle->callback([&] { exit_code = run_oracle(og, orr, ot, oopts); });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "tightness sweep at n = (r-1)(t-1)+1");
  int sr = 0, st = 0, sn = 0, ssamples = 64;
  ramsey::ArrowOptions sopts;
  sweep->add_option("--r", sr, "clique order")->required();
  sweep->add_option("--t", st, "path order")->required();
  sweep->add_option("--n", sn, "vertex count (default (r-1)(t-1)+1)");
  sweep->add_option("--samples", ssamples, "sample count above the exhaustive range");
  sweep->add_option("--threads", sopts.threads, "worker count (0 = all cores)");
  sweep->add_option("--max-edges", sopts.max_edges, "enumeration budget");
  sweep->add_flag("--deterministic", sopts.deterministic, "deterministic oracle runs");
  sweep->callback([&] { exit_code = run_sweep(sr, st, sn, ssamples, sopts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  } catch (const ramsey::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ramsey::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ramsey::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ramsey::invariant_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
