#include "graphreal/cut_bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphreal {

namespace {

void require_subset(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.all())) throw ValidationError("vertex set mentions a vertex outside the graph");
}

std::int64_t cross_sum(const LinearCode& code, const GraphDecomposition& d, const std::vector<VertexSet>& parts) {
  std::int64_t sum = 0;
  for (const auto& p : parts) sum += static_cast<std::int64_t>(cross_section_dim(code, d.preimage(p)));
  return sum;
}

std::string names(const Graph& g, VertexSet s) {
  std::string out = "{";
  for (const auto& l : g.labels_of(s)) out += (out.size() > 1 ? "," : "") + l;
  return out + "}";
}

}  // namespace

CutBoundResult edge_cut_rhs(const LinearCode& code, const GraphDecomposition& decomp, VertexSet side_a,
                            VertexSet side_b, std::span<const EdgeId> cut) {
  decomp.require_code(code);
  const Graph& g = decomp.graph();
  require_subset(g, side_a);
  require_subset(g, side_b);
  if (side_a.intersects(side_b) || (side_a | side_b) != g.all()) {
    throw ValidationError("edge cut sides must partition the vertex set");
  }
  for (auto e : cut) {
    if (e >= g.edge_count()) throw ValidationError("unknown edge in cut");
  }
  for (const auto& comp : delete_edges(g, cut).components) {
    if (comp.intersects(side_a) && comp.intersects(side_b)) {
      throw ValidationError("edge set does not separate the two sides");
    }
  }
  CutBoundResult r;
  r.kind = CutKind::edge_cut;
  r.parts = {side_a, side_b};
  r.edges.assign(cut.begin(), cut.end());
  r.rhs = static_cast<std::int64_t>(code.dim()) - cross_sum(code, decomp, r.parts);
  r.lhs_description = "sum of state dimensions over the cut edges";
  return r;
}

CutBoundResult vertex_cut_rhs(const LinearCode& code, const GraphDecomposition& decomp, const StarPartition& sp) {
  decomp.require_code(code);
  if (Check c = validate_star_partition(decomp.graph(), sp); !c) {
    throw ValidationError("invalid star partition: " + c.violation);
  }
  CutBoundResult r;
  r.kind = CutKind::vertex_cut;
  r.center = sp.center;
  r.parts = sp.parts;
  r.rhs = static_cast<std::int64_t>(code.dim()) - cross_sum(code, decomp, r.parts);
  r.lhs_description = "sum of constraint dimensions over " + names(decomp.graph(), sp.center);
  return r;
}

CutBoundResult lambda(const LinearCode& code, const GraphDecomposition& decomp, VertexSet w) {
  require_subset(decomp.graph(), w);
  return vertex_cut_rhs(code, decomp, star_partition_from_cut(decomp.graph(), w));
}

GraphicalModel star_tree_model(const GraphicalModel& model, const StarPartition& sp, std::size_t max_variables) {
  const Graph& g = model.graph();
  if (Check c = validate_star_partition(g, sp); !c) throw ValidationError("invalid star partition: " + c.violation);
  const LinearCode behavior = full_behavior(model, max_variables);
  const GraphDecomposition& d = model.decomposition();
  const std::size_t n = d.index_set().size();
  const std::size_t delta = sp.parts.size();

  std::vector<std::size_t> state_offset(g.edge_count());
  std::size_t offset = n;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    state_offset[e] = offset;
    offset += model.state_dims()[e];
  }

  // Star tree: hub 0, leaf i for part i.
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i <= delta; ++i) {
    labels.push_back("V" + std::to_string(i));
    if (i > 0) edges.push_back({0, i});
  }
  std::vector<VertexId> alpha(n);
  for (std::size_t j = 0; j < n; ++j) {
    alpha[j] = 0;
    for (std::size_t i = 0; i < delta; ++i) {
      if (sp.parts[i].contains(d.omega(j))) alpha[j] = i + 1;
    }
  }
  GraphDecomposition star(Graph(std::move(labels), edges), d.index_set(), std::move(alpha));

  // Keep symbols, plus the pivot columns of B|_{X_i} for each leaf edge.
  std::vector<std::size_t> keep(n);
  for (std::size_t j = 0; j < n; ++j) keep[j] = j;
  std::vector<std::string> renamed = d.index_set();
  std::vector<std::size_t> dims(delta, 0);
  for (std::size_t i = 0; i < delta; ++i) {
    std::vector<std::size_t> cols;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      if (sp.parts[i].contains(ed.u) != sp.parts[i].contains(ed.v)) {
        for (std::size_t c = 0; c < model.state_dims()[e]; ++c) cols.push_back(state_offset[e] + c);
      }
    }
    const LinearCode crossing = project_positions(behavior, cols);
    for (auto p : crossing.pivots()) {
      keep.push_back(cols[p]);
      renamed.push_back(GraphicalModel::state_label(i, dims[i]++));
    }
  }
  const LinearCode reduced = project_positions(behavior, keep).relabeled(renamed);
  std::vector<LinearCode> constraints;
  for (VertexId v = 0; v <= delta; ++v) {
    constraints.push_back(project(reduced, GraphicalModel::local_index(star, dims, v)));
  }
  return GraphicalModel(std::move(star), model.field(), std::move(dims), std::move(constraints));
}

std::vector<VertexSet> default_cuts(const Graph& g, std::size_t max_size) {
  std::vector<VertexSet> out;
  const std::size_t n = g.vertex_count();
  for (std::size_t size = 1; size <= std::min(max_size, n); ++size) {
    std::vector<VertexId> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      VertexSet w;
      for (auto v : pick) w.insert(v);
      if (g.components(g.all() - w).size() >= 2) out.push_back(w);
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  if (n > 0) out.push_back(g.all());
  return out;
}

LpBound lp_kappa_plus_lower_bound(const LinearCode& code, const GraphDecomposition& decomp,
                                  const std::vector<VertexSet>& cuts) {
  const Graph& g = decomp.graph();
  const std::size_t nv = g.vertex_count();
  LpBound out;
  for (const auto& w : cuts) {
    if (w.empty()) throw ValidationError("LP cuts must be nonempty vertex sets");
    out.cuts.push_back(lambda(code, decomp, w));
  }
  const std::size_t t = cuts.size();

  // Packing dual: max sum lambda_i y_i, sum_{i : v in W_i} y_i <= 1, y >= 0.
  std::vector<std::vector<Rational>> a(nv, std::vector<Rational>(t));
  for (std::size_t i = 0; i < t; ++i) {
    for (auto v : cuts[i].to_vector()) a[v][i] = 1;
  }
  std::vector<Rational> b(nv, Rational(1));
  std::vector<Rational> c(t);
  for (std::size_t i = 0; i < t; ++i) c[i] = Rational(static_cast<long>(out.cuts[i].rhs));
  const LpSolution sol = maximize(a, b, c);
  if (sol.status != LpStatus::optimal) throw std::logic_error("packing LP cannot be unbounded");
  out.value = sol.value;
  out.y = sol.x;
  out.xi = sol.duals;
  out.pivots = sol.pivots;

  // Both certificates, exactly.
  Rational primal = 0;
  for (const auto& x : out.xi) {
    if (x < 0) throw std::logic_error("LP certificate: negative xi");
    primal += x;
  }
  for (std::size_t i = 0; i < t; ++i) {
    Rational lhs = 0;
    for (auto v : cuts[i].to_vector()) lhs += out.xi[v];
    if (lhs < c[i]) throw std::logic_error("LP certificate: cut constraint violated");
  }
  for (std::size_t v = 0; v < nv; ++v) {
    Rational load = 0;
    for (std::size_t i = 0; i < t; ++i) load += a[v][i] * out.y[i];
    if (load > 1) throw std::logic_error("LP certificate: packing constraint violated");
  }
  if (primal != out.value) throw std::logic_error("LP certificate: duality gap");
  return out;
}

std::uint64_t ceil_nonnegative(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  if (q < 0) return 0;
  return q.get_ui();
}

std::size_t kappa_lower_from_cuts(const LinearCode& code, const GraphDecomposition& decomp,
                                  const std::vector<VertexSet>& cuts) {
  if (cuts.empty()) throw ValidationError("kappa lower bound needs at least one cut");
  std::size_t best = 0;
  for (const auto& w : cuts) {
    if (w.empty()) throw ValidationError("cuts must be nonempty vertex sets");
    const auto r = lambda(code, decomp, w);
    if (r.rhs <= 0) continue;
    best = std::max<std::size_t>(best, (static_cast<std::size_t>(r.rhs) + w.size() - 1) / w.size());
  }
  return best;
}

}  // namespace graphreal
