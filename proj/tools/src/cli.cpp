#include "graphreal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "graphreal/bound_engine.hpp"
#include "graphreal/builders.hpp"
#include "graphreal/cut_bounds.hpp"
#include "graphreal/io.hpp"
#include "graphreal/minimal.hpp"
#include "graphreal/nkd.hpp"
#include "graphreal/vc_search.hpp"
#include "json.hpp"
#include "report.hpp"

namespace graphreal::cli {

using json = nlohmann::ordered_json;

namespace {

struct Inputs {
  std::string fixture;
  std::string code;
  std::string graph;
  std::string omega;
  std::string tree;
  std::string vctree;
  std::string cuts;
  std::string realization;
};

struct Context {
  Guards guards;
  std::string out_path;
  std::string dot_path;
  std::optional<unsigned> guard_bits;
  Inputs in;
  std::optional<Fixture> loaded;

  const Fixture* fixture() {
    if (in.fixture.empty()) return nullptr;
    if (!loaded) loaded = graphreal::fixture(in.fixture);
    return &*loaded;
  }
};

std::string need(const std::string& path, const char* option) {
  if (path.empty()) throw ValidationError(std::string("missing required input ") + option + " (or --fixture)");
  return path;
}

LinearCode load_code(Context& ctx) {
  if (const auto* f = ctx.fixture(); f && ctx.in.code.empty()) return f->code;
  const auto path = need(ctx.in.code, "--code");
  return parse_code(read_text_file(path), path);
}

Graph load_graph(Context& ctx) {
  if (const auto* f = ctx.fixture(); f && ctx.in.graph.empty()) return f->decomposition.graph();
  const auto path = need(ctx.in.graph, "--graph");
  return parse_graph(read_text_file(path), path);
}

GraphDecomposition load_decomposition(Context& ctx, const LinearCode& code, const Graph& g) {
  if (const auto* f = ctx.fixture(); f && ctx.in.omega.empty() && ctx.in.graph.empty()) {
    f->decomposition.require_code(code);
    return f->decomposition;
  }
  const auto path = need(ctx.in.omega, "--omega");
  return parse_omega(read_text_file(path), g, code, path);
}

VertexCutTree load_vctree(Context& ctx, const Graph& g) {
  if (const auto* f = ctx.fixture(); f && ctx.in.vctree.empty()) {
    if (!f->vctree) throw ValidationError("fixture '" + f->name + "' has no vertex-cut tree; pass --vctree");
    return *f->vctree;
  }
  const auto path = need(ctx.in.vctree, "--vctree");
  return parse_vctree(read_text_file(path), g, path);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ValidationError("cannot write '" + path + "'");
  os << text;
  if (!os) throw ValidationError("failed writing '" + path + "'");
}

void add_input_options(CLI::App* sub, Inputs& in, bool code, bool graph, bool omega) {
  sub->add_option("--fixture", in.fixture, "Use a built-in fixture for inputs not given as files");
  if (code) sub->add_option("--code", in.code, "Code file (JSON)");
  if (graph) sub->add_option("--graph", in.graph, "Graph file (JSON)");
  if (omega) sub->add_option("--omega", in.omega, "Index map file (JSON)");
}

// ---------------------------------------------------------------- commands

json cmd_code_info(Context& ctx) {
  const auto code = load_code(ctx);
  json r;
  r["field"] = code.field().order();
  r["n"] = code.length();
  r["k"] = code.dim();
  r["d"] = code.dim() == 0 ? 0 : minimum_distance(code, ctx.guards.enumeration_limit());
  r["index_set"] = code.index_set();
  r["generators"] = code.generators().to_rows();
  r["pivots"] = code.pivots();
  return r;
}

struct MinTreeOptions {
  std::string realization_out;
};

json cmd_min_tree(Context& ctx, const MinTreeOptions& opt) {
  const auto code = load_code(ctx);
  const auto tpath = need(ctx.in.tree, "--tree");
  Tree tree = parse_tree(read_text_file(tpath), tpath);
  const auto opath = need(ctx.in.omega, "--omega");
  const auto decomp = parse_omega(read_text_file(opath), tree.graph(), code, opath);
  const CodeTreeDecomposition td(decomp);
  const auto model = build_minimal(code, td);
  json r = report::minimal_tree(code, td, model);
  if (model.variable_count() <= ctx.guards.behavior_variables) {
    const auto check = verify_realization(model, code, ctx.guards.behavior_variables);
    r["verified"] = check.ok;
    if (!check.ok) r["violation"] = check.violation;
  } else {
    r["verified"] = nullptr;
    r["verification"] = "skipped: more than " + std::to_string(ctx.guards.behavior_variables) + " variables";
  }
  if (!opt.realization_out.empty()) write_file(opt.realization_out, realization_to_json(model));
  if (!ctx.dot_path.empty()) write_file(ctx.dot_path, report::model_dot(model));
  return r;
}

struct ExactOptions {
  std::size_t max_n = 10;
};

void require_length(const LinearCode& code, std::size_t max_n) {
  if (code.length() > max_n) {
    throw GuardExceeded("code length " + std::to_string(code.length()) + " exceeds --max-n " +
                        std::to_string(max_n));
  }
}

json cmd_kappa_tree(Context& ctx, const ExactOptions& opt) {
  const auto code = load_code(ctx);
  require_length(code, opt.max_n);
  const auto res = kappa_tree_exact(code, ctx.guards.enumeration_limit());
  json r;
  r["kappa"] = res.kappa;
  r["candidates"] = res.candidates;
  r["family"] = "leaf-labelled cubic trees";
  r["witness"] = report::tree_decomposition(res.witness);
  r["witness_dims"] = report::minimal_tree(code, res.witness, build_minimal(code, res.witness));
  if (!ctx.dot_path.empty()) write_file(ctx.dot_path, res.witness.tree().graph().to_dot("witness"));
  return r;
}

json cmd_kappa_path(Context& ctx, const ExactOptions& opt) {
  const auto code = load_code(ctx);
  require_length(code, opt.max_n);
  const auto res = kappa_path_exact(code, ctx.guards.enumeration_limit());
  json r;
  r["kappa"] = res.kappa;
  r["candidates"] = res.candidates;
  json order = json::array();
  for (auto p : res.ordering) order.push_back(code.index_set()[p]);
  r["ordering"] = order;
  r["witness_dims"] = report::minimal_tree(code, res.witness, build_minimal(code, res.witness));
  if (!ctx.dot_path.empty()) write_file(ctx.dot_path, res.witness.tree().graph().to_dot("witness"));
  return r;
}

struct CutOptions {
  std::size_t max_cut_size = 2;
};

std::vector<VertexSet> vertex_cut_family(Context& ctx, const Graph& g, const CutOptions& opt) {
  if (!ctx.in.cuts.empty()) return parse_cuts(read_text_file(ctx.in.cuts), g, ctx.in.cuts);
  std::uint64_t count = 0;
  std::uint64_t binom = 1;
  for (std::size_t j = 1; j <= std::min(opt.max_cut_size, g.vertex_count()); ++j) {
    binom = binom * (g.vertex_count() - j + 1) / j;
    count += binom;
    if (count > ctx.guards.enumeration_limit()) throw GuardExceeded("too many candidate vertex cuts");
  }
  return default_cuts(g, opt.max_cut_size);
}

json cmd_vertex_cut(Context& ctx, const CutOptions& opt) {
  const auto code = load_code(ctx);
  const auto g = load_graph(ctx);
  const auto decomp = load_decomposition(ctx, code, g);
  const auto cuts = vertex_cut_family(ctx, g, opt);
  json rows = json::array();
  std::int64_t best_plus = 0;
  for (auto w : cuts) {
    const auto res = lambda(code, decomp, w);
    auto row = report::cut(g, res);
    const auto size = static_cast<std::int64_t>(w.size());
    row["kappa_lower"] = res.rhs <= 0 ? 0 : (res.rhs + size - 1) / size;
    best_plus = std::max(best_plus, res.rhs);
    rows.push_back(row);
  }
  json r;
  r["kind"] = "vertex-cut";
  r["cuts"] = rows;
  r["kappa_lower"] = kappa_lower_from_cuts(code, decomp, cuts);
  r["kappa_plus_lower"] = best_plus;
  return r;
}

/// Edge sets of size 1..s (edge-id lexicographic) whose removal disconnects g.
std::vector<std::vector<EdgeId>> edge_cut_family(const Graph& g, std::size_t s, std::uint64_t limit) {
  std::vector<std::vector<EdgeId>> out;
  std::uint64_t visited = 0;
  std::vector<EdgeId> cur;
  std::function<void(EdgeId)> rec = [&](EdgeId from) {
    if (!cur.empty()) {
      if (++visited > limit) throw GuardExceeded("too many candidate edge cuts");
      if (g.components_without_edges(cur).size() >= 2) out.push_back(cur);
    }
    if (cur.size() == s) return;
    for (EdgeId e = from; e < g.edge_count(); ++e) {
      cur.push_back(e);
      rec(e + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

json cmd_edge_cut(Context& ctx, const CutOptions& opt) {
  const auto code = load_code(ctx);
  const auto g = load_graph(ctx);
  const auto decomp = load_decomposition(ctx, code, g);
  std::vector<CutBoundResult> results;
  if (!ctx.in.cuts.empty()) {
    // Each listed set is one side; X is every edge leaving it.
    for (auto side : parse_cuts(read_text_file(ctx.in.cuts), g, ctx.in.cuts)) {
      const auto other = g.all() - side;
      if (side.empty() || other.empty()) throw ValidationError(ctx.in.cuts + ": an edge-cut side must be a proper nonempty subset");
      std::vector<EdgeId> x;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (side.contains(g.edge(e).u) != side.contains(g.edge(e).v)) x.push_back(e);
      }
      results.push_back(edge_cut_rhs(code, decomp, side, other, x));
    }
  } else {
    for (const auto& x : edge_cut_family(g, opt.max_cut_size, ctx.guards.enumeration_limit())) {
      const auto comps = g.components_without_edges(x);
      results.push_back(edge_cut_rhs(code, decomp, comps.front(), g.all() - comps.front(), x));
    }
  }
  json rows = json::array();
  std::int64_t best = 0;
  for (const auto& res : results) {
    auto row = report::cut(g, res);
    const auto size = static_cast<std::int64_t>(res.edges.size());
    const std::int64_t lower = res.rhs <= 0 ? 0 : (res.rhs + size - 1) / size;
    row["sigma_lower"] = lower;
    best = std::max(best, lower);
    rows.push_back(row);
  }
  json r;
  r["kind"] = "edge-cut";
  r["cuts"] = rows;
  r["sigma_lower"] = best;
  return r;
}

json cmd_lp(Context& ctx, const CutOptions& opt) {
  const auto code = load_code(ctx);
  const auto g = load_graph(ctx);
  const auto decomp = load_decomposition(ctx, code, g);
  const auto cuts = vertex_cut_family(ctx, g, opt);
  const auto lp = lp_kappa_plus_lower_bound(code, decomp, cuts);
  json rows = json::array();
  for (std::size_t i = 0; i < lp.cuts.size(); ++i) {
    auto row = report::cut(g, lp.cuts[i]);
    row["y"] = lp.y[i].get_str();
    rows.push_back(row);
  }
  json xi = json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) xi[g.label(v)] = lp.xi[v].get_str();
  const auto plus = ceil_nonnegative(lp.value);
  const auto per_vertex = ceil_nonnegative(Rational(lp.value / static_cast<long>(g.vertex_count())));
  json r;
  r["kind"] = "lp";
  r["value"] = lp.value.get_str();
  r["kappa_plus_lower"] = plus;
  r["kappa_lower"] = std::max<std::uint64_t>(kappa_lower_from_cuts(code, decomp, cuts), per_vertex);
  r["xi"] = xi;
  r["cuts"] = rows;
  r["pivots"] = lp.pivots;
  return r;
}

json cmd_theorem(Context& ctx) {
  const auto code = load_code(ctx);
  const auto g = load_graph(ctx);
  const auto decomp = load_decomposition(ctx, code, g);
  const auto vct = load_vctree(ctx, g);
  const auto cert = theorem_bound(code, decomp, vct);
  if (!ctx.dot_path.empty()) write_file(ctx.dot_path, report::vctree_dot(g, vct, &cert.mu.m));
  return report::certificate(code, g, vct, cert);
}

struct NkdOptions {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  unsigned precision = 20;
};

json cmd_nkd(const NkdOptions& opt) {
  const auto b = nkd_treewidth_bound(opt.n, opt.k, opt.d, opt.precision);
  json r;
  r["n"] = opt.n;
  r["k"] = opt.k;
  r["d"] = opt.d;
  r["lower"] = b.lower.get_str();
  r["upper"] = b.upper.get_str();
  r["log2_n_minus_1"] = {{"lower", b.log2_n_minus_1.lower.get_str()},
                         {"upper", b.log2_n_minus_1.upper.get_str()},
                         {"exact", b.log2_n_minus_1.exact}};
  r["precision_bits"] = opt.precision;
  r["kappa_tree_lower"] = b.kappa_tree_lower;
  r["path_value"] = b.path_value.get_str();
  r["kappa_path_lower"] = b.kappa_path_lower;
  return r;
}

struct CorollaryOptions {
  std::optional<std::size_t> kappa_tree;
  std::optional<std::size_t> kappa_path;
  std::optional<std::size_t> vc_tree;
  std::optional<std::size_t> vc_path;
};

json cmd_corollary(Context& ctx, const CorollaryOptions& opt) {
  const auto code = load_code(ctx);
  const auto g = load_graph(ctx);
  CorollaryInputs in;
  const auto given = [](std::optional<std::size_t> v) -> std::optional<SourcedValue> {
    if (!v) return std::nullopt;
    return SourcedValue{*v, true, "given"};
  };
  in.kappa_tree_code = given(opt.kappa_tree);
  in.kappa_path_code = given(opt.kappa_path);
  in.vc_tree_graph = given(opt.vc_tree);
  in.vc_path_graph = given(opt.vc_path);
  return report::corollary(corollary_bounds(code, g, in, ctx.guards));
}

struct VcOptions {
  bool exact = false;
  bool upper = false;
  bool paths = false;
  std::size_t node_budget = 0;
  std::optional<std::size_t> max_vertices;
};

json cmd_vc_tree(Context& ctx, const VcOptions& opt) {
  const auto g = load_graph(ctx);
  const auto max_v = opt.max_vertices.value_or(ctx.guards.vc_exact_vertices);
  const bool exact = opt.exact || (!opt.upper && g.vertex_count() <= max_v);
  WidthResult res;
  if (exact) {
    res = vc_treewidth_exact(g, opt.node_budget, opt.paths, max_v);
  } else {
    res = vc_pathwidth_upper(g);
    if (!opt.paths) {
      auto tw = vc_treewidth_upper(g);
      if (tw.value < res.value) res = std::move(tw);
    }
  }
  if (!ctx.dot_path.empty()) write_file(ctx.dot_path, report::vctree_dot(g, res.witness, nullptr));
  json r = report::width(g, res);
  r["paths_only"] = opt.paths;
  return r;
}

struct VerifyResult {
  json report;
  bool valid = false;
};

VerifyResult cmd_verify(Context& ctx) {
  const auto rpath = need(ctx.in.realization, "--realization");
  const auto model = parse_realization(read_text_file(rpath), rpath);
  const auto code = load_code(ctx);
  const auto check = verify_realization(model, code, ctx.guards.behavior_variables);
  const auto m = measure(model);
  json r;
  r["valid"] = check.ok;
  if (!check.ok) r["violation"] = check.violation;
  r["variables"] = model.variable_count();
  r["complexity"] = report::complexity(m);
  if (!ctx.dot_path.empty()) write_file(ctx.dot_path, report::model_dot(model));
  return {r, check.ok};
}

struct FixtureOptions {
  std::string name;
  bool check = false;
  std::string write_dir;
};

json fixture_entry(const Fixture& f) {
  json e;
  e["name"] = f.name;
  e["description"] = f.description;
  e["notes"] = f.notes;
  e["n"] = f.code.length();
  e["k"] = f.code.dim();
  e["graph_vertices"] = f.decomposition.graph().vertex_count();
  e["has_vctree"] = f.vctree.has_value();
  e["expected"] = report::expected(f.expected);
  return e;
}

std::pair<json, bool> cmd_fixtures(Context& ctx, const FixtureOptions& opt) {
  std::vector<std::string> names = opt.name.empty() ? fixture_names() : std::vector<std::string>{opt.name};
  json list = json::array();
  bool all_ok = true;
  for (const auto& name : names) {
    const auto f = fixture(name);
    json e = fixture_entry(f);
    if (opt.check) {
      json checks = json::array();
      for (const auto& c : check_fixture(f, ctx.guards)) {
        checks.push_back({{"key", c.key}, {"expected", c.expected}, {"actual", c.actual},
                          {"provenance", c.provenance}, {"method", c.method}, {"ok", c.ok}});
        all_ok = all_ok && c.ok;
      }
      e["checks"] = checks;
    }
    if (!opt.write_dir.empty()) {
      json files = json::array();
      for (const auto& p : write_fixture(f, opt.write_dir)) files.push_back(p.generic_string());
      e["written"] = files;
    }
    list.push_back(e);
  }
  json r;
  r["fixtures"] = list;
  if (opt.check) r["all_ok"] = all_ok;
  return {r, all_ok};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  CLI::App app{"Graphical realizations of linear codes and lower bounds on their complexity", "graphreal"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", ctx.out_path, "Write the JSON report to this file instead of stdout");
  app.add_option("--dot", ctx.dot_path, "Also write a Graphviz rendering of the main object");
  app.add_option("--guard-bits", ctx.guard_bits, "Enumeration guard (2^bits items); overrides GRAPHREAL_GUARD_BITS")
      ->check(CLI::Range(1, 62));

  auto& in = ctx.in;
  auto* code_info = app.add_subcommand("code-info", "Length, dimension, minimum distance and RREF generators");
  add_input_options(code_info, in, true, false, false);

  MinTreeOptions mt;
  auto* min_tree = app.add_subcommand("min-tree", "Minimal realization on a tree decomposition");
  min_tree->add_option("--code", in.code)->required();
  min_tree->add_option("--tree", in.tree)->required();
  min_tree->add_option("--omega", in.omega)->required();
  min_tree->add_option("--realization-out", mt.realization_out, "Write the realization file here");

  ExactOptions kt;
  auto* kappa_tree = app.add_subcommand("kappa-tree-exact", "Exhaustive minimum kappa over cubic trees");
  add_input_options(kappa_tree, in, true, false, false);
  kappa_tree->add_option("--max-n", kt.max_n, "Refuse codes longer than this")->capture_default_str();
  ExactOptions kp;
  auto* kappa_path = app.add_subcommand("kappa-path-exact", "Exhaustive minimum kappa over coordinate orderings");
  add_input_options(kappa_path, in, true, false, false);
  kappa_path->add_option("--max-n", kp.max_n, "Refuse codes longer than this")->capture_default_str();

  auto* bound = app.add_subcommand("bound", "Lower bounds on realization complexity");
  bound->require_subcommand(1);
  CutOptions cut_opt;
  const auto add_cut_command = [&](const char* name, const char* help) {
    auto* s = bound->add_subcommand(name, help);
    add_input_options(s, in, true, true, true);
    auto* cuts = s->add_option("--cuts", in.cuts, "Cut family file (JSON)");
    s->add_option("--max-cut-size", cut_opt.max_cut_size, "Enumerate cuts up to this size")
        ->capture_default_str()
        ->excludes(cuts);
    return s;
  };
  auto* vertex_cut = add_cut_command("vertex-cut", "Vertex-Cut bound over a cut family");
  auto* edge_cut = add_cut_command("edge-cut", "Edge-Cut bound over a cut family");
  auto* lp = add_cut_command("lp", "LP bound on kappa-plus over a vertex-cut family");
  auto* theorem = bound->add_subcommand("theorem", "Bound from a vertex-cut tree of the graph");
  add_input_options(theorem, in, true, true, true);
  theorem->add_option("--vctree", in.vctree, "Vertex-cut tree file (JSON)");
  NkdOptions nk;
  auto* nkd = bound->add_subcommand("nkd", "Treewidth bound from code parameters");
  nkd->add_option("--n", nk.n)->required();
  nkd->add_option("--k", nk.k)->required();
  nkd->add_option("--d", nk.d)->required();
  nkd->add_option("--precision-bits", nk.precision, "Dyadic precision of the log bracket")
      ->capture_default_str()
      ->check(CLI::Range(1, 26));
  CorollaryOptions co;
  auto* corollary = bound->add_subcommand("corollary", "Code width divided by graph vc-width");
  add_input_options(corollary, in, true, true, false);
  corollary->add_option("--kappa-tree", co.kappa_tree, "Known tree complexity of the code");
  corollary->add_option("--kappa-path", co.kappa_path, "Known path complexity of the code");
  corollary->add_option("--vc-tree", co.vc_tree, "Known vc-treewidth of the graph");
  corollary->add_option("--vc-path", co.vc_path, "Known vc-pathwidth of the graph");

  VcOptions vo;
  auto* vc = app.add_subcommand("vc-tree", "vc-treewidth or vc-pathwidth of a graph");
  add_input_options(vc, in, false, true, false);
  auto* exact_flag = vc->add_flag("--exact", vo.exact, "Exhaustive search");
  vc->add_flag("--upper", vo.upper, "Heuristic upper bound")->excludes(exact_flag);
  vc->add_flag("--paths", vo.paths, "Restrict to vertex-cut paths");
  vc->add_option("--node-budget", vo.node_budget, "Max tree nodes searched (0: |V|)");
  vc->add_option("--max-vertices", vo.max_vertices, "Exact-search vertex guard");

  auto* verify = app.add_subcommand("verify-realization", "Check a realization file against a code");
  add_input_options(verify, in, true, false, false);
  verify->add_option("--realization", in.realization)->required();

  FixtureOptions fo;
  auto* fixtures = app.add_subcommand("fixtures", "List, check or export the built-in fixtures");
  fixtures->add_option("--name", fo.name, "Restrict to one fixture");
  fixtures->add_flag("--check", fo.check, "Recompute every checkable expected value");
  fixtures->add_option("--write", fo.write_dir, "Export fixture files under this directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    ctx.guards = Guards::from_environment();
    if (ctx.guard_bits) ctx.guards.enumeration_bits = *ctx.guard_bits;
    json r;
    int status = kOk;
    if (*code_info) r = cmd_code_info(ctx);
    else if (*min_tree) r = cmd_min_tree(ctx, mt);
    else if (*kappa_tree) r = cmd_kappa_tree(ctx, kt);
    else if (*kappa_path) r = cmd_kappa_path(ctx, kp);
    else if (*vertex_cut) r = cmd_vertex_cut(ctx, cut_opt);
    else if (*edge_cut) r = cmd_edge_cut(ctx, cut_opt);
    else if (*lp) r = cmd_lp(ctx, cut_opt);
    else if (*theorem) r = cmd_theorem(ctx);
    else if (*nkd) r = cmd_nkd(nk);
    else if (*corollary) r = cmd_corollary(ctx, co);
    else if (*vc) r = cmd_vc_tree(ctx, vo);
    else if (*verify) {
      auto v = cmd_verify(ctx);
      r = std::move(v.report);
      if (!v.valid) status = kValidation;
    } else if (*fixtures) {
      auto [report, ok] = cmd_fixtures(ctx, fo);
      r = std::move(report);
      if (!ok) status = kValidation;
    }
    const auto text = r.dump(2) + "\n";
    if (ctx.out_path.empty()) out << text;
    else write_file(ctx.out_path, text);
    return status;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  }
}

}  // namespace graphreal::cli
