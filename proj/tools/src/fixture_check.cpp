#include <fstream>
#include <stdexcept>

#include "graphreal/bound_engine.hpp"
#include "graphreal/builders.hpp"
#include "graphreal/cli.hpp"
#include "graphreal/io.hpp"
#include "graphreal/minimal.hpp"
#include "graphreal/nkd.hpp"
#include "graphreal/vc_search.hpp"
#include "report.hpp"

namespace graphreal::cli {

namespace {

struct Value {
  std::int64_t value = 0;
  bool certain = true;
  std::string method;
};

Value graph_width(const Graph& g, bool paths, const Guards& guards) {
  if (g.vertex_count() <= guards.vc_exact_vertices) {
    const auto r = vc_treewidth_exact(g, 0, paths, guards.vc_exact_vertices);
    return {static_cast<std::int64_t>(r.value), true, "exact search: " + r.family};
  }
  auto r = vc_pathwidth_upper(g);
  if (!paths) {
    auto tw = vc_treewidth_upper(g);
    if (tw.value < r.value) r = std::move(tw);
  }
  const bool exact = r.certainty == Certainty::exact;
  return {static_cast<std::int64_t>(r.value), exact,
          r.family + (exact ? " meeting the lower bound" : " (upper bound only)")};
}

const VertexCutTree& require_vctree(const Fixture& f) {
  if (!f.vctree) throw std::logic_error("fixture " + f.name + " has no vertex-cut tree");
  return *f.vctree;
}

Value evaluate(const Fixture& f, const std::string& key, const Guards& guards) {
  const auto& code = f.code;
  const auto& d = f.decomposition;
  const auto& g = d.graph();
  const auto i64 = [](auto v) { return static_cast<std::int64_t>(v); };
  if (key == "n") return {i64(code.length()), true, "length"};
  if (key == "k") return {i64(code.dim()), true, "rank of generators"};
  if (key == "d") return {i64(minimum_distance(code, guards.enumeration_limit())), true, "codeword enumeration"};
  if (key == "mu" || key == "theorem_bound") {
    const auto cert = theorem_bound(code, d, require_vctree(f));
    return {i64(key == "mu" ? cert.mu.mu : cert.bound), true, "theorem_bound on the fixture vctree"};
  }
  if (key == "kappa_path_ordering") {
    const auto td = path_decomposition(code, f.ordering);
    return {i64(measure(build_minimal(code, td)).kappa), true, "build_minimal on the fixture ordering"};
  }
  if (key == "kappa_path_exact") {
    return {i64(kappa_path_exact(code, guards.enumeration_limit()).kappa), true, "exhaustive orderings"};
  }
  if (key == "kappa_tree_exact") {
    return {i64(kappa_tree_exact(code, guards.enumeration_limit()).kappa), true, "exhaustive cubic trees"};
  }
  if (key == "spanning_tree_kappa") {
    return {i64(measure(extend_via_spanning_tree(code, d)).kappa), true, "extend_via_spanning_tree"};
  }
  if (key == "vc_tree") return graph_width(g, false, guards);
  if (key == "vc_path") return graph_width(g, true, guards);
  if (key == "corollary_path_bound") {
    const auto* kp = f.find("kappa_path_ordering");
    if (!kp) throw std::logic_error("corollary_path_bound needs kappa_path_ordering");
    CorollaryInputs in;
    in.kappa_path_code = SourcedValue{static_cast<std::size_t>(kp->value), true, "fixture kappa_path"};
    const auto r = corollary_bounds(code, g, in, guards);
    if (!r.path_bound) throw std::logic_error("no path bound formed");
    return {i64(*r.path_bound), true, "corollary_bounds with kappa_path from the fixture"};
  }
  if (key == "nkd_kappa_tree_lower" || key == "nkd_kappa_path_lower") {
    const auto dist = minimum_distance(code, guards.enumeration_limit());
    const auto b = nkd_treewidth_bound(code.length(), code.dim(), dist);
    return {i64(key == "nkd_kappa_tree_lower" ? b.kappa_tree_lower : b.kappa_path_lower), true,
            "nkd_treewidth_bound"};
  }
  if (key == "treewidth_decomposition") {
    const auto& v = require_vctree(f);
    return {i64(td_width(g, GraphTreeDecomposition{v.tree, v.beta})), true, "td_width of the fixture tree"};
  }
  if (key == "vc_width_decomposition") {
    return {i64(vc_width(g, require_vctree(f))), true, "vc_width of the fixture tree"};
  }
  if (key == "gamma_matches") {
    const auto& v = require_vctree(f);
    if (!f.alpha_root) throw std::logic_error("gamma_matches needs alpha_root");
    const auto& t = v.tree.graph();
    const auto alpha = build_alpha(g, v, t.id(*f.alpha_root));
    const auto gamma = build_gamma(code, d, v, alpha);
    bool same = f.expected_gamma.size() == code.length();
    for (std::size_t i = 0; same && i < code.length(); ++i) {
      same = t.label(gamma.decomposition().omega(i)) == f.expected_gamma[i];
    }
    return {same ? 1 : 0, true, "build_gamma compared with the listed assignment"};
  }
  throw std::logic_error("no evaluator for expected key '" + key + "'");
}

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw ValidationError("cannot write '" + p.string() + "'");
  os << text;
}

}  // namespace

std::vector<FixtureCheck> check_fixture(const Fixture& f, const Guards& guards) {
  std::vector<FixtureCheck> out;
  for (const auto& e : f.expected) {
    if (!e.checkable) continue;
    const auto v = evaluate(f, e.key, guards);
    out.push_back({e.key, e.value, v.value, e.provenance, v.certain && v.value == e.value, v.method});
  }
  return out;
}

std::vector<std::filesystem::path> write_fixture(const Fixture& f, const std::filesystem::path& dir) {
  using json = report::json;
  const auto base = dir / f.name;
  std::filesystem::create_directories(base);
  std::vector<std::filesystem::path> files;
  const auto put = [&](const char* name, const std::string& text) {
    write_text(base / name, text);
    files.push_back(base / name);
  };
  put("code.json", code_to_json(f.code));
  put("graph.json", graph_to_json(f.decomposition.graph()));
  put("omega.json", omega_to_json(f.decomposition));
  if (f.vctree) put("vctree.json", vctree_to_json(f.decomposition.graph(), *f.vctree));

  json meta;
  meta["name"] = f.name;
  meta["description"] = f.description;
  meta["notes"] = f.notes;
  json files_json = {{"code", "code.json"}, {"graph", "graph.json"}, {"omega", "omega.json"}};
  if (f.vctree) files_json["vctree"] = "vctree.json";
  meta["files"] = files_json;
  json ordering = json::array();
  for (auto p : f.ordering) ordering.push_back(f.code.index_set()[p]);
  meta["ordering"] = ordering;
  if (f.alpha_root) meta["alpha_root"] = *f.alpha_root;
  if (!f.expected_gamma.empty()) {
    json gamma = json::object();
    for (std::size_t i = 0; i < f.expected_gamma.size(); ++i) gamma[f.code.index_set()[i]] = f.expected_gamma[i];
    meta["expected_gamma"] = gamma;
  }
  meta["expected"] = report::expected(f.expected);
  put("fixture.json", meta.dump(2) + "\n");
  return files;
}

}  // namespace graphreal::cli
