#include "graphreal/bound_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "graphreal/enumerate.hpp"

namespace graphreal {

MuReport mu(const LinearCode& code, const GraphDecomposition& decomp, const VertexCutTree& vct) {
  decomp.require_code(code);
  const Graph& g = decomp.graph();
  if (Check c = validate_vctree(g, vct); !c) throw ValidationError("invalid vertex-cut tree: " + c.violation);
  MuReport r;
  const Graph& t = vct.tree.graph();
  for (VertexId z = 0; z < t.vertex_count(); ++z) {
    std::size_t sum = 0;
    for (const auto& part : induced_parts(vct, z)) sum += cross_section_dim(code, decomp.preimage(part));
    r.m.push_back(code.dim() - sum);
  }
  r.mu = *std::max_element(r.m.begin(), r.m.end());
  bool found = false;
  for (VertexId z = 0; z < t.vertex_count(); ++z) {
    if (r.m[z] != r.mu) continue;
    if (!found || t.label(z) < t.label(r.argmax)) r.argmax = z;
    found = true;
  }
  return r;
}

AlphaMap build_alpha(const Graph& g, const VertexCutTree& vct, VertexId root) {
  const Tree& t = vct.tree;
  if (root >= t.size()) throw ValidationError("unknown tree node for z*");
  if (Check c = validate_vctree(g, vct); !c) throw ValidationError("invalid vertex-cut tree: " + c.violation);
  AlphaMap a;
  a.root = root;
  a.alpha.resize(t.size());
  for (VertexId z = 0; z < t.size(); ++z) {
    if (z == root) {
      a.alpha[z] = vct.beta[z];
      continue;
    }
    VertexSet toward;
    const auto path = t.path(z, root);
    for (std::size_t i = 1; i < path.size(); ++i) toward |= vct.beta[path[i]];
    a.alpha[z] = vct.beta[z] - toward;
  }

  VertexSet seen;
  for (const auto& s : a.alpha) {
    if (s.intersects(seen)) throw std::logic_error("alpha sets overlap");
    seen |= s;
  }
  if (seen != g.all()) throw std::logic_error("alpha sets do not cover the graph");
  for (VertexId z = 0; z < t.size(); ++z) {
    for (const auto& branch : t.branches(z)) {
      VertexSet al, be;
      for (auto x : branch.to_vector()) {
        al |= a.alpha[x];
        be |= vct.beta[x];
      }
      const VertexSet expect = branch.contains(root) ? be : be - vct.beta[z];
      if (al != expect) throw std::logic_error("alpha branch identity fails");
    }
  }
  return a;
}

CodeTreeDecomposition build_gamma(const LinearCode& code, const GraphDecomposition& decomp,
                                  const VertexCutTree& vct, const AlphaMap& alpha) {
  decomp.require_code(code);
  std::vector<VertexId> gamma(code.length());
  for (std::size_t i = 0; i < code.length(); ++i) {
    const VertexId v = decomp.omega(i);
    bool placed = false;
    for (VertexId z = 0; z < alpha.alpha.size(); ++z) {
      if (alpha.alpha[z].contains(v)) {
        gamma[i] = z;
        placed = true;
      }
    }
    if (!placed) throw ValidationError("alpha does not cover the vertex of coordinate '" + code.index_set()[i] + "'");
  }
  return CodeTreeDecomposition(vct.tree, code.index_set(), std::move(gamma));
}

LowerBoundCertificate theorem_bound(const LinearCode& code, const GraphDecomposition& decomp,
                                    const VertexCutTree& vct) {
  LowerBoundCertificate c;
  c.mu = mu(code, decomp, vct);
  c.vc_width = vc_width(decomp.graph(), vct);
  c.alpha = build_alpha(decomp.graph(), vct, c.mu.argmax);
  c.gamma = build_gamma(code, decomp, vct, c.alpha);
  c.kappa_gamma = kappa_of_tree_decomp(code, c.gamma);
  if (c.kappa_gamma != c.mu.mu) throw std::logic_error("kappa(C;T,gamma) differs from mu");
  c.bound = c.vc_width == 0 ? 0 : (c.mu.mu + c.vc_width - 1) / c.vc_width;
  return c;
}

std::size_t CorollaryReport::best() const {
  return std::max(tree_bound.value_or(0), path_bound.value_or(0));
}

CorollaryReport corollary_bounds(const LinearCode& code, const Graph& g, CorollaryInputs in, const Guards& guards) {
  const std::uint64_t limit = guards.enumeration_limit();
  if (!in.kappa_tree_code && code.length() <= 32 && cubic_tree_count(code.length()) <= limit) {
    in.kappa_tree_code = SourcedValue{kappa_tree_exact(code, limit).kappa, true, "exhaustive cubic-tree search"};
  }
  if (!in.kappa_path_code && path_ordering_count(code.length()) <= limit) {
    in.kappa_path_code = SourcedValue{kappa_path_exact(code, limit).kappa, true, "exhaustive path-ordering search"};
  }
  const bool small = g.vertex_count() <= guards.vc_exact_vertices;
  if (!in.vc_tree_graph) {
    WidthResult w;
    if (small) {
      w = vc_treewidth_exact(g, 0, false, guards.vc_exact_vertices);
    } else {
      // A vertex-cut path is also a vertex-cut tree.
      w = vc_treewidth_upper(g);
      const WidthResult p = vc_pathwidth_upper(g);
      if (p.value < w.value) w = p;
      if (w.value == w.asserted_lower_bound) w.certainty = Certainty::exact;
    }
    in.vc_tree_graph = SourcedValue{w.value, w.certainty == Certainty::exact, w.family};
  }
  if (!in.vc_path_graph) {
    const WidthResult w = small ? vc_treewidth_exact(g, 0, true, guards.vc_exact_vertices) : vc_pathwidth_upper(g);
    in.vc_path_graph = SourcedValue{w.value, w.certainty == Certainty::exact, w.family};
  }

  CorollaryReport r;
  r.kappa_tree_code = in.kappa_tree_code;
  r.kappa_path_code = in.kappa_path_code;
  r.vc_tree_graph = in.vc_tree_graph;
  r.vc_path_graph = in.vc_path_graph;
  auto ratio = [](std::size_t num, std::size_t den) { return den == 0 ? 0 : (num + den - 1) / den; };
  if (r.kappa_tree_code && r.vc_tree_graph) {
    r.tree_bound = ratio(r.kappa_tree_code->value, r.vc_tree_graph->value);
    r.weakened |= !r.vc_tree_graph->exact;
  }
  if (r.kappa_path_code && r.vc_path_graph) {
    r.path_bound = ratio(r.kappa_path_code->value, r.vc_path_graph->value);
    r.weakened |= !r.vc_path_graph->exact;
  }
  if (!r.tree_bound && !r.path_bound) {
    throw ValidationError("corollary bounds need kappa_tree or kappa_path of the code; supply one");
  }
  return r;
}

}  // namespace graphreal
