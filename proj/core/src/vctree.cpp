#include "graphreal/vctree.hpp"

#include <algorithm>

namespace graphreal {

namespace {

std::string node_name(const Tree& t, VertexId z) { return "'" + t.graph().label(z) + "'"; }

Check check_shape(const Graph& g, const Tree& t, const std::vector<VertexSet>& beta) {
  if (beta.size() != t.size()) return Check::fail("bag map must give one bag per tree node");
  VertexSet covered;
  for (VertexId z = 0; z < beta.size(); ++z) {
    if (!beta[z].subset_of(g.all())) return Check::fail("bag at " + node_name(t, z) + " has unknown vertices");
    covered |= beta[z];
  }
  if (covered != g.all()) {
    return Check::fail("coverage fails: vertex '" + g.label((g.all() - covered).front()) + "' is in no bag");
  }
  for (VertexId x = 0; x < t.size(); ++x) {
    for (VertexId y = x + 1; y < t.size(); ++y) {
      const VertexSet common = beta[x] & beta[y];
      if (common.empty()) continue;
      for (auto z : t.path(x, y)) {
        if (!common.subset_of(beta[z])) {
          return Check::fail("running intersection fails: vertex '" + g.label((common - beta[z]).front()) +
                             "' is in " + node_name(t, x) + " and " + node_name(t, y) + " but not in " +
                             node_name(t, z));
        }
      }
    }
  }
  return Check::pass();
}

}  // namespace

std::vector<VertexSet> induced_parts(const VertexCutTree& vct, VertexId z) {
  std::vector<VertexSet> parts;
  for (const auto& branch : vct.tree.branches(z)) {
    VertexSet p;
    for (auto x : branch.to_vector()) p |= vct.beta[x];
    parts.push_back(p - vct.beta[z]);
  }
  return parts;
}

Check validate_vctree(const Graph& g, const VertexCutTree& vct) {
  if (Check c = check_shape(g, vct.tree, vct.beta); !c) return c;
  for (VertexId z = 0; z < vct.tree.size(); ++z) {
    const StarPartition sp{vct.beta[z], induced_parts(vct, z)};
    if (Check c = validate_star_partition(g, sp); !c) {
      return Check::fail("star partition fails at node " + node_name(vct.tree, z) + ": " + c.violation);
    }
  }
  return Check::pass();
}

std::size_t vc_width(const Graph& g, const VertexCutTree& vct) {
  if (Check c = validate_vctree(g, vct); !c) throw ValidationError("invalid vertex-cut tree: " + c.violation);
  std::size_t w = 0;
  for (const auto& b : vct.beta) w = std::max(w, b.size());
  return w;
}

Check validate_tree_decomposition(const Graph& g, const GraphTreeDecomposition& td) {
  if (Check c = check_shape(g, td.tree, td.beta); !c) return c;
  for (const auto& e : g.edges()) {
    const VertexSet ends = VertexSet::of({e.u, e.v});
    if (std::none_of(td.beta.begin(), td.beta.end(), [&](VertexSet b) { return ends.subset_of(b); })) {
      return Check::fail("edge {" + g.label(e.u) + "," + g.label(e.v) + "} lies in no bag");
    }
  }
  return Check::pass();
}

std::size_t td_width(const Graph& g, const GraphTreeDecomposition& td) {
  if (Check c = validate_tree_decomposition(g, td); !c) {
    throw ValidationError("invalid tree decomposition: " + c.violation);
  }
  std::size_t w = 0;
  for (const auto& b : td.beta) w = std::max(w, b.size());
  return w == 0 ? 0 : w - 1;
}

VertexCutTree td_as_vctree(const Graph& g, const GraphTreeDecomposition& td) {
  if (Check c = validate_tree_decomposition(g, td); !c) {
    throw ValidationError("invalid tree decomposition: " + c.violation);
  }
  return {td.tree, td.beta};
}

VertexCutTree trivial_vctree(const Graph& g) {
  return {Tree(Graph({"z0"}, std::vector<Edge>{})), {g.all()}};
}

}  // namespace graphreal
