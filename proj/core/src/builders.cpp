#include "graphreal/builders.hpp"

#include <algorithm>
#include <unordered_map>

namespace graphreal {

GraphDecomposition star_decomposition(const LinearCode& code) {
  std::vector<std::string> vertices{"hub"};
  std::vector<Edge> edges;
  std::vector<VertexId> omega;
  for (std::size_t i = 0; i < code.length(); ++i) {
    vertices.push_back("leaf:" + code.index_set()[i]);
    edges.push_back({0, i + 1});
    omega.push_back(i + 1);
  }
  return GraphDecomposition(Graph(std::move(vertices), edges), code.index_set(), std::move(omega));
}

namespace {

GraphicalModel star_with_dims(const LinearCode& code, std::vector<std::size_t> dims) {
  GraphDecomposition d = star_decomposition(code);
  const Field f = code.field();
  const std::size_t n = code.length();
  std::vector<std::size_t> kept;
  std::vector<std::string> hub_labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (dims[i] == 1) {
      kept.push_back(i);
      hub_labels.push_back(GraphicalModel::state_label(i, 0));
    }
  }
  std::vector<LinearCode> constraints;
  constraints.push_back(project_positions(code, kept).relabeled(hub_labels));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> local{code.index_set()[i]};
    if (dims[i] == 0) {
      constraints.push_back(LinearCode::zero(f, local));
      continue;
    }
    local.push_back(GraphicalModel::state_label(i, 0));
    constraints.push_back(LinearCode::canonicalize(Matrix::from_rows(f, 2, {{1, 1}}), local));
  }
  return GraphicalModel(std::move(d), f, std::move(dims), std::move(constraints));
}

}  // namespace

GraphicalModel star_model(const LinearCode& code) {
  return star_with_dims(code, std::vector<std::size_t>(code.length(), 1));
}

GraphicalModel build_star(const LinearCode& code) {
  std::vector<std::size_t> dims(code.length());
  for (std::size_t i = 0; i < code.length(); ++i) {
    const std::size_t p[1] = {i};
    dims[i] = projection_dim(code, p);
  }
  return star_with_dims(code, std::move(dims));
}

GraphicalModel extend_via_spanning_tree(const LinearCode& code, const GraphDecomposition& decomp) {
  decomp.require_code(code);
  const Graph& g = decomp.graph();
  const Tree t = spanning_tree(g);
  const CodeTreeDecomposition td(t, decomp.index_set(), decomp.omega());
  const GraphicalModel m = build_minimal(code, td);

  std::vector<std::size_t> dims(g.edge_count(), 0);
  std::unordered_map<std::string, std::string> rename;
  for (EdgeId te = 0; te < t.graph().edge_count(); ++te) {
    const Edge& e = t.graph().edge(te);
    const EdgeId ge = *g.edge_between(e.u, e.v);
    dims[ge] = m.state_dims()[te];
    for (std::size_t j = 0; j < dims[ge]; ++j) {
      rename[GraphicalModel::state_label(te, j)] = GraphicalModel::state_label(ge, j);
    }
  }
  std::vector<LinearCode> constraints;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const LinearCode& c = m.constraint(v);
    std::vector<std::string> labels;
    for (const auto& l : c.index_set()) {
      auto it = rename.find(l);
      labels.push_back(it == rename.end() ? l : it->second);
    }
    constraints.push_back(project(c.relabeled(labels), GraphicalModel::local_index(decomp, dims, v)));
  }
  return GraphicalModel(decomp, code.field(), std::move(dims), std::move(constraints));
}

GraphicalModel build_broadcast(const LinearCode& code, const GraphDecomposition& decomp) {
  decomp.require_code(code);
  const Graph& g = decomp.graph();
  const Field f = code.field();
  const std::size_t k = code.dim();
  std::vector<std::size_t> dims(g.edge_count(), k);
  std::vector<LinearCode> constraints;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto local = GraphicalModel::local_index(decomp, dims, v);
    const auto symbols = decomp.preimage(VertexSet::single(v));
    const std::size_t deg = g.degree(v);
    Matrix image(f, 0, local.size());
    std::vector<Element> row;
    for (std::size_t r = 0; r < k; ++r) {
      row.clear();
      for (auto i : symbols) row.push_back(code.generators()(r, i));
      for (std::size_t e = 0; e < deg; ++e) {
        for (std::size_t c = 0; c < k; ++c) row.push_back(c == r ? 1 : 0);
      }
      image.append_row(row);
    }
    constraints.push_back(LinearCode::canonicalize(std::move(image), local));
  }
  return GraphicalModel(decomp, f, std::move(dims), std::move(constraints));
}

}  // namespace graphreal
