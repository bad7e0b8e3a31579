#include "report.hpp"

#include <sstream>

#include "graphreal/io.hpp"

namespace graphreal::cli::report {

json labels(const Graph& g, VertexSet s) { return g.labels_of(s); }

json complexity(const ComplexityReport& m) {
  json r;
  r["kappa"] = m.kappa;
  r["kappa_plus"] = m.kappa_plus;
  r["kappa_tot"] = m.kappa_tot;
  r["sigma"] = m.sigma;
  r["sigma_plus"] = m.sigma_plus;
  r["sigma_tot"] = m.sigma_tot;
  return r;
}

json minimal_tree(const LinearCode& code, const CodeTreeDecomposition& td, const GraphicalModel& model) {
  const auto& d = td.decomposition();
  const auto& g = d.graph();
  const auto dims = minimal_dims(code, td);
  const auto m = measure(model);
  json edges = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    edges.push_back({{"id", e},
                     {"ends", {g.label(g.edge(e).u), g.label(g.edge(e).v)}},
                     {"state_dim", m.state_dims[e]},
                     {"formula", dims.state[e]}});
  }
  json vertices = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    json coords = json::array();
    for (auto p : d.preimage(VertexSet::single(v))) coords.push_back(d.index_set()[p]);
    vertices.push_back({{"vertex", g.label(v)},
                        {"coordinates", coords},
                        {"constraint_dim", m.constraint_dims[v]},
                        {"formula", dims.constraint[v]}});
  }
  json r;
  r["n"] = code.length();
  r["k"] = code.dim();
  r["edges"] = edges;
  r["vertices"] = vertices;
  r["complexity"] = complexity(m);
  r["kappa_plus_identity"] = m.kappa_plus == code.dim() + m.sigma_plus;
  return r;
}

json tree_decomposition(const CodeTreeDecomposition& td) {
  json r;
  r["tree"] = json::parse(graph_to_json(td.tree().graph()));
  r["omega"] = json::parse(omega_to_json(td.decomposition()))["omega"];
  return r;
}

json cut(const Graph& g, const CutBoundResult& res) {
  json r;
  if (res.kind == CutKind::vertex_cut) {
    r["W"] = labels(g, res.center);
  } else {
    json x = json::array();
    for (auto e : res.edges) x.push_back({g.label(g.edge(e).u), g.label(g.edge(e).v)});
    r["X"] = x;
  }
  json parts = json::array();
  for (auto p : res.parts) parts.push_back(labels(g, p));
  r["parts"] = parts;
  r["rhs"] = res.rhs;
  r["bounds"] = res.lhs_description;
  r["vacuous"] = res.vacuous();
  return r;
}

json certificate(const LinearCode& code, const Graph& g, const VertexCutTree& vct,
                 const LowerBoundCertificate& cert) {
  const auto& t = vct.tree.graph();
  json m = json::object();
  json alpha = json::object();
  for (VertexId z = 0; z < t.vertex_count(); ++z) {
    m[t.label(z)] = cert.mu.m[z];
    alpha[t.label(z)] = labels(g, cert.alpha.alpha[z]);
  }
  json gamma = json::object();
  const auto& gd = cert.gamma.decomposition();
  for (std::size_t i = 0; i < code.length(); ++i) gamma[code.index_set()[i]] = t.label(gd.omega(i));
  json r;
  r["bound"] = cert.bound;
  r["mu"] = cert.mu.mu;
  r["vc_width"] = cert.vc_width;
  r["argmax"] = t.label(cert.mu.argmax);
  r["m"] = m;
  r["alpha_root"] = t.label(cert.alpha.root);
  r["alpha"] = alpha;
  r["gamma"] = gamma;
  r["kappa_gamma"] = cert.kappa_gamma;
  return r;
}

namespace {

json sourced(const std::optional<SourcedValue>& v) {
  if (!v) return nullptr;
  return {{"value", v->value}, {"exact", v->exact}, {"source", v->source}};
}

json opt(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json corollary(const CorollaryReport& r) {
  json o;
  o["kappa_tree_code"] = sourced(r.kappa_tree_code);
  o["kappa_path_code"] = sourced(r.kappa_path_code);
  o["vc_tree_graph"] = sourced(r.vc_tree_graph);
  o["vc_path_graph"] = sourced(r.vc_path_graph);
  o["tree_bound"] = opt(r.tree_bound);
  o["path_bound"] = opt(r.path_bound);
  o["weakened"] = r.weakened;
  o["best"] = r.best();
  return o;
}

json width(const Graph& g, const WidthResult& res) {
  json r;
  r["value"] = res.value;
  r["certainty"] = res.certainty == Certainty::exact ? "exact" : "upper_bound";
  r["family"] = res.family;
  r["lower_bound"] = res.asserted_lower_bound;
  r["explored"] = res.explored;
  r["witness"] = json::parse(vctree_to_json(g, res.witness));
  return r;
}

json expected(const std::vector<ExpectedValue>& values) {
  json a = json::array();
  for (const auto& e : values) {
    a.push_back({{"key", e.key}, {"value", e.value}, {"provenance", e.provenance}, {"checkable", e.checkable}});
  }
  return a;
}

std::string model_dot(const GraphicalModel& model) {
  const auto& g = model.graph();
  const auto m = measure(model);
  std::ostringstream os;
  os << "graph \"realization\" {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "  \"" << g.label(v) << "\" [label=\"" << g.label(v) << "\\nk=" << m.constraint_dims[v] << "\"];\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    os << "  \"" << g.label(g.edge(e).u) << "\" -- \"" << g.label(g.edge(e).v) << "\" [label=\"s="
       << m.state_dims[e] << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string vctree_dot(const Graph& g, const VertexCutTree& vct, const std::vector<std::size_t>* m) {
  const auto& t = vct.tree.graph();
  std::ostringstream os;
  os << "graph \"vctree\" {\n";
  for (VertexId z = 0; z < t.vertex_count(); ++z) {
    os << "  \"" << t.label(z) << "\" [label=\"" << t.label(z) << ": {";
    bool first = true;
    for (const auto& l : g.labels_of(vct.beta[z])) {
      os << (first ? "" : ",") << l;
      first = false;
    }
    os << "}";
    if (m) os << "\\nm=" << (*m)[z];
    os << "\"];\n";
  }
  for (const auto& e : t.edges()) os << "  \"" << t.label(e.u) << "\" -- \"" << t.label(e.v) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace graphreal::cli::report
