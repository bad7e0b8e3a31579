#include "graphreal/minimal.hpp"

#include <algorithm>

#include "graphreal/enumerate.hpp"

namespace graphreal {

CodeTreeDecomposition::CodeTreeDecomposition(Tree tree, std::vector<std::string> index_set,
                                             std::vector<VertexId> omega)
    : tree_(std::move(tree)), decomposition_(tree_.graph(), std::move(index_set), std::move(omega)) {}

CodeTreeDecomposition::CodeTreeDecomposition(const GraphDecomposition& d)
    : tree_(d.graph()), decomposition_(d) {}

CodeTreeDecomposition path_decomposition(const LinearCode& code, std::span<const std::size_t> ordering) {
  const std::size_t n = code.length();
  if (ordering.size() != n) throw ValidationError("ordering must list every coordinate once");
  std::vector<VertexId> omega(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ordering[i] >= n || omega[ordering[i]] != n) throw ValidationError("ordering is not a permutation");
    omega[ordering[i]] = i;
  }
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < std::max<std::size_t>(n, 1); ++i) {
    labels.push_back("p" + std::to_string(i));
    if (i > 0) edges.push_back({i - 1, i});
  }
  return CodeTreeDecomposition(Tree(Graph(std::move(labels), edges)), code.index_set(), std::move(omega));
}

namespace {

void require_on(const LinearCode& code, const CodeTreeDecomposition& td) {
  td.decomposition().require_code(code);
}

}  // namespace

std::size_t dim_state(const LinearCode& code, const CodeTreeDecomposition& td, EdgeId e) {
  require_on(code, td);
  if (e >= td.tree().graph().edge_count()) throw ValidationError("unknown tree edge");
  const auto [a, b] = td.tree().sides(e);
  const auto& d = td.decomposition();
  return code.dim() - cross_section_dim(code, d.preimage(a)) - cross_section_dim(code, d.preimage(b));
}

std::size_t dim_constraint(const LinearCode& code, const CodeTreeDecomposition& td, VertexId v) {
  require_on(code, td);
  if (v >= td.tree().size()) throw ValidationError("unknown tree vertex");
  std::size_t sum = 0;
  for (const auto& part : td.tree().branches(v)) {
    sum += cross_section_dim(code, td.decomposition().preimage(part));
  }
  return code.dim() - sum;
}

MinimalDims minimal_dims(const LinearCode& code, const CodeTreeDecomposition& td) {
  MinimalDims out;
  const Graph& t = td.tree().graph();
  for (EdgeId e = 0; e < t.edge_count(); ++e) out.state.push_back(dim_state(code, td, e));
  for (VertexId v = 0; v < t.vertex_count(); ++v) out.constraint.push_back(dim_constraint(code, td, v));
  return out;
}

std::size_t kappa_of_tree_decomp(const LinearCode& code, const CodeTreeDecomposition& td) {
  std::size_t best = 0;
  for (VertexId v = 0; v < td.tree().size(); ++v) best = std::max(best, dim_constraint(code, td, v));
  return best;
}

GraphicalModel build_minimal(const LinearCode& code, const CodeTreeDecomposition& td) {
  require_on(code, td);
  const Graph& t = td.tree().graph();
  const Field f = code.field();
  const Matrix& g = code.generators();
  const std::size_t k = code.dim();

  // states[e] holds, per generator, its state vector on edge e.
  std::vector<Matrix> states;
  std::vector<std::size_t> dims;
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    const auto j = td.decomposition().preimage(td.tree().sides(e).first);
    const LinearCode inner = cross_section_positions(code, j);
    const Matrix& x = inner.generators();
    Matrix reduced(f, 0, j.size());
    std::vector<Element> w(j.size());
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < j.size(); ++c) w[c] = g(r, j[c]);
      for (std::size_t xr = 0; xr < x.rows(); ++xr) {
        const Element lead = w[inner.pivots()[xr]];
        if (lead == 0) continue;
        for (std::size_t c = 0; c < j.size(); ++c) w[c] = f.sub(w[c], f.mul(lead, x(xr, c)));
      }
      reduced.append_row(w);
    }
    Matrix basis = reduced;
    const auto pivots = row_reduce(basis);
    states.push_back(reduced.select_columns(pivots));
    dims.push_back(pivots.size());
  }

  std::vector<LinearCode> constraints;
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    const auto local = GraphicalModel::local_index(td.decomposition(), dims, v);
    Matrix image(f, 0, local.size());
    auto edges = t.incident(v);
    std::sort(edges.begin(), edges.end());
    const auto symbols = td.decomposition().preimage(VertexSet::single(v));
    std::vector<Element> row;
    for (std::size_t r = 0; r < k; ++r) {
      row.clear();
      for (auto i : symbols) row.push_back(g(r, i));
      for (auto e : edges) {
        for (std::size_t c = 0; c < dims[e]; ++c) row.push_back(states[e](r, c));
      }
      image.append_row(row);
    }
    constraints.push_back(LinearCode::canonicalize(std::move(image), local));
  }
  return GraphicalModel(td.decomposition(), f, std::move(dims), std::move(constraints));
}

std::size_t kappa_of_ordering(const CrossSectionTable& table, std::span<const std::size_t> ordering) {
  const std::size_t n = ordering.size();
  std::vector<CoordinateMask> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] | (CoordinateMask{1} << ordering[i]);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const CoordinateMask suffix = table.all() & ~prefix[i + 1];
    best = std::max(best, table.dim() - table(prefix[i]) - table(suffix));
  }
  return best;
}

namespace {

std::size_t leaf_tree_kappa(const CrossSectionTable& table, const LeafLabeledTree& t, std::size_t cutoff,
                            std::vector<std::vector<VertexId>>& adj, std::vector<CoordinateMask>& sub,
                            std::vector<VertexId>& parent, std::vector<VertexId>& order) {
  for (auto& a : adj) a.clear();
  adj.resize(t.nodes);
  for (const auto& e : t.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  // Root at the first internal node; post-order subtree leaf masks.
  const VertexId root = t.leaves;
  parent.assign(t.nodes, t.nodes);
  order.clear();
  order.push_back(root);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto u : adj[order[i]]) {
      if (parent[u] == t.nodes) {
        parent[u] = order[i];
        order.push_back(u);
      }
    }
  }
  sub.assign(t.nodes, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    if (v < t.leaves) sub[v] |= CoordinateMask{1} << v;
    if (v != root) sub[parent[v]] |= sub[v];
  }
  std::size_t best = 0;
  for (VertexId v = 0; v < t.nodes; ++v) {
    std::size_t sum = 0;
    for (auto u : adj[v]) sum += table(u == parent[v] && v != root ? table.all() & ~sub[v] : sub[u]);
    best = std::max(best, table.dim() - sum);
    if (best >= cutoff) return best;
  }
  return best;
}

}  // namespace

TreeSearchResult kappa_tree_exact(const LinearCode& code, std::uint64_t limit) {
  const std::size_t n = code.length();
  TreeSearchResult result;
  if (n <= 2) {
    const auto& labels = code.index_set();
    std::vector<std::string> vertices = n == 0 ? std::vector<std::string>{"#0"} : labels;
    std::vector<Edge> edges;
    if (n == 2) edges.push_back({0, 1});
    std::vector<VertexId> omega;
    for (std::size_t i = 0; i < n; ++i) omega.push_back(i);
    result.witness = CodeTreeDecomposition(Tree(Graph(vertices, edges)), labels, omega);
    result.kappa = kappa_of_tree_decomp(code, result.witness);
    result.candidates = 1;
    return result;
  }
  if (cubic_tree_count(n) > limit || n > 32) {
    throw GuardExceeded("cubic-tree search over " + std::to_string(n) + " leaves exceeds the enumeration limit");
  }
  const CrossSectionTable table(code);
  std::size_t best = code.dim() + 1;
  LeafLabeledTree best_tree;
  std::vector<std::vector<VertexId>> adj;
  std::vector<CoordinateMask> sub;
  std::vector<VertexId> parent, order;
  for_each_cubic_tree(n, limit, [&](const LeafLabeledTree& t) {
    ++result.candidates;
    const std::size_t k = leaf_tree_kappa(table, t, best, adj, sub, parent, order);
    if (k < best) {
      best = k;
      best_tree = t;
    }
    return best > 0;
  });
  result.kappa = best;
  std::vector<VertexId> omega(n);
  for (std::size_t i = 0; i < n; ++i) omega[i] = i;
  result.witness = CodeTreeDecomposition(best_tree.to_tree(code.index_set()), code.index_set(), omega);
  return result;
}

PathSearchResult kappa_path_exact(const LinearCode& code, std::uint64_t limit) {
  const std::size_t n = code.length();
  if (path_ordering_count(n) > limit || n > 64) {
    throw GuardExceeded("path-ordering search over " + std::to_string(n) +
                        " coordinates exceeds the enumeration limit");
  }
  PathSearchResult result;
  const CrossSectionTable table(code);
  result.kappa = code.dim() + 1;
  for_each_path_ordering(n, limit, [&](std::span<const std::size_t> ord) {
    ++result.candidates;
    const std::size_t k = kappa_of_ordering(table, ord);
    if (k < result.kappa) {
      result.kappa = k;
      result.ordering.assign(ord.begin(), ord.end());
    }
    return result.kappa > 0;
  });
  if (n == 0) result.kappa = 0;
  result.witness = path_decomposition(code, result.ordering);
  return result;
}

}  // namespace graphreal
