#include "graphreal/model.hpp"

#include <algorithm>
#include <unordered_set>

namespace graphreal {

GraphDecomposition::GraphDecomposition(Graph graph, std::vector<std::string> index_set,
                                       std::vector<VertexId> omega)
    : graph_(std::move(graph)), index_set_(std::move(index_set)), omega_(std::move(omega)) {
  if (graph_.vertex_count() == 0) throw ValidationError("graph decomposition needs a nonempty graph");
  if (!graph_.connected()) throw ValidationError("graph decomposition requires a connected graph");
  if (omega_.size() != index_set_.size()) {
    throw ValidationError("index map covers " + std::to_string(omega_.size()) + " of " +
                          std::to_string(index_set_.size()) + " coordinates");
  }
  for (std::size_t i = 0; i < omega_.size(); ++i) {
    if (omega_[i] >= graph_.vertex_count()) {
      throw ValidationError("coordinate '" + index_set_[i] + "' maps to a nonexistent vertex");
    }
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : index_set_) {
    if (!seen.insert(l).second) throw ValidationError("duplicate coordinate label '" + l + "'");
  }
}

GraphDecomposition GraphDecomposition::from_labels(Graph graph, std::vector<std::string> index_set,
                                                   const std::vector<std::string>& vertex_of) {
  std::vector<VertexId> omega;
  omega.reserve(vertex_of.size());
  for (const auto& l : vertex_of) omega.push_back(graph.id(l));
  return GraphDecomposition(std::move(graph), std::move(index_set), std::move(omega));
}

std::vector<std::size_t> GraphDecomposition::preimage(VertexSet vertices) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < omega_.size(); ++i) {
    if (vertices.contains(omega_[i])) out.push_back(i);
  }
  return out;
}

CoordinateMask GraphDecomposition::preimage_mask(VertexSet vertices) const {
  if (omega_.size() > 64) throw ValidationError("coordinate masks need codes of length <= 64");
  CoordinateMask m = 0;
  for (std::size_t i = 0; i < omega_.size(); ++i) {
    if (vertices.contains(omega_[i])) m |= CoordinateMask{1} << i;
  }
  return m;
}

void GraphDecomposition::require_code(const LinearCode& code) const {
  if (code.index_set() != index_set_) {
    throw ValidationError("code and decomposition have different index sets");
  }
}

GraphicalModel::GraphicalModel(GraphDecomposition decomposition, Field field,
                               std::vector<std::size_t> state_dims, std::vector<LinearCode> constraints)
    : decomposition_(std::move(decomposition)),
      field_(field),
      state_dims_(std::move(state_dims)),
      constraints_(std::move(constraints)) {
  const Graph& g = graph();
  if (state_dims_.size() != g.edge_count()) throw ValidationError("one state dimension per edge required");
  if (constraints_.size() != g.vertex_count()) throw ValidationError("one local constraint per vertex required");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (constraints_[v].field() != field_) {
      throw ValidationError("constraint at '" + g.label(v) + "' is over a different field");
    }
    if (constraints_[v].index_set() != local_index(v)) {
      throw ValidationError("constraint at '" + g.label(v) + "' is not defined on its local index set");
    }
  }
  const auto global = global_index();
  std::unordered_set<std::string> seen(global.begin(), global.end());
  if (seen.size() != global.size()) {
    throw ValidationError("state labels collide with symbol labels");
  }
}

std::string GraphicalModel::state_label(EdgeId e, std::size_t j) {
  return "(e" + std::to_string(e) + "," + std::to_string(j) + ")";
}

std::vector<std::string> GraphicalModel::state_labels(EdgeId e) const {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < state_dims_[e]; ++j) out.push_back(state_label(e, j));
  return out;
}

std::vector<std::string> GraphicalModel::local_index(const GraphDecomposition& d,
                                                     const std::vector<std::size_t>& state_dims, VertexId v) {
  std::vector<std::string> out;
  for (auto i : d.preimage(VertexSet::single(v))) out.push_back(d.index_set()[i]);
  auto edges = d.graph().incident(v);
  std::sort(edges.begin(), edges.end());
  for (auto e : edges) {
    for (std::size_t j = 0; j < state_dims[e]; ++j) out.push_back(state_label(e, j));
  }
  return out;
}

std::vector<std::string> GraphicalModel::global_index() const {
  std::vector<std::string> out = decomposition_.index_set();
  for (EdgeId e = 0; e < graph().edge_count(); ++e) {
    for (auto& l : state_labels(e)) out.push_back(std::move(l));
  }
  return out;
}

std::size_t GraphicalModel::variable_count() const {
  std::size_t n = decomposition_.index_set().size();
  for (auto d : state_dims_) n += d;
  return n;
}

LinearCode full_behavior(const GraphicalModel& model, std::size_t max_variables) {
  const std::size_t total = model.variable_count();
  if (total > max_variables) {
    throw GuardExceeded("full behavior has " + std::to_string(total) + " variables, limit is " +
                        std::to_string(max_variables));
  }
  const auto global = model.global_index();
  std::unordered_map<std::string, std::size_t> where;
  for (std::size_t i = 0; i < global.size(); ++i) where.emplace(global[i], i);

  // Stack every local parity check, lifted to global coordinates.
  Matrix system(model.field(), 0, total);
  std::vector<Element> row(total);
  for (VertexId v = 0; v < model.graph().vertex_count(); ++v) {
    const LinearCode& c = model.constraint(v);
    if (c.dim() == c.length()) continue;
    const Matrix h = c.parity_check();
    std::vector<std::size_t> cols;
    for (const auto& l : c.index_set()) cols.push_back(where.at(l));
    for (std::size_t r = 0; r < h.rows(); ++r) {
      std::fill(row.begin(), row.end(), 0);
      for (std::size_t j = 0; j < cols.size(); ++j) row[cols[j]] = h(r, j);
      system.append_row(row);
    }
  }
  if (system.rows() == 0) return LinearCode::full(model.field(), global);
  return LinearCode::canonicalize(nullspace(system), global);
}

Check check_essential(const GraphicalModel& model, const LinearCode& behavior) {
  const Graph& g = model.graph();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto local = project(behavior, model.local_index(v));
    if (!(local == model.constraint(v))) {
      return Check::fail("not essential: B|_v has dim " + std::to_string(local.dim()) + " but C_v has dim " +
                         std::to_string(model.constraint(v).dim()) + " at vertex '" + g.label(v) + "'");
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const std::size_t d = project(behavior, model.state_labels(e)).dim();
    if (d != model.state_dims()[e]) {
      return Check::fail("not essential: B|_e has dim " + std::to_string(d) + " but the state space has dim " +
                         std::to_string(model.state_dims()[e]) + " on edge {" + g.label(g.edge(e).u) + "," +
                         g.label(g.edge(e).v) + "}");
    }
  }
  return Check::pass();
}

GraphicalModel essentialize(const GraphicalModel& model, std::size_t max_variables) {
  const LinearCode behavior = full_behavior(model, max_variables);
  const Graph& g = model.graph();
  const std::size_t n = model.decomposition().index_set().size();

  std::vector<std::size_t> keep(n);
  for (std::size_t i = 0; i < n; ++i) keep[i] = i;
  std::vector<std::string> renamed = model.decomposition().index_set();
  std::vector<std::size_t> dims(g.edge_count(), 0);
  std::size_t offset = n;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::vector<std::size_t> cols(model.state_dims()[e]);
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = offset + j;
    const LinearCode on_edge = project_positions(behavior, cols);
    for (auto p : on_edge.pivots()) {
      keep.push_back(offset + p);
      renamed.push_back(GraphicalModel::state_label(e, dims[e]++));
    }
    offset += cols.size();
  }
  const LinearCode reduced = project_positions(behavior, keep).relabeled(renamed);

  std::vector<LinearCode> constraints;
  constraints.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    constraints.push_back(project(reduced, GraphicalModel::local_index(model.decomposition(), dims, v)));
  }
  return GraphicalModel(model.decomposition(), model.field(), std::move(dims), std::move(constraints));
}

Check verify_realization(const GraphicalModel& model, const LinearCode& code, std::size_t max_variables) {
  model.decomposition().require_code(code);
  if (code.field() != model.field()) throw ValidationError("code and model are over different fields");
  const LinearCode behavior = full_behavior(model, max_variables);
  if (Check c = check_essential(model, behavior); !c) return c;
  const LinearCode symbols = project(behavior, code.index_set());
  if (!(symbols == code)) {
    return Check::fail("B|_I has dim " + std::to_string(symbols.dim()) + " and differs from the code (dim " +
                       std::to_string(code.dim()) + ")");
  }
  return Check::pass();
}

ComplexityReport measure(const GraphicalModel& model) {
  ComplexityReport r;
  const std::uint64_t q = model.field().order();
  auto add = [](std::uint64_t a, std::uint64_t b) {
    if (a > UINT64_MAX - b) throw GuardExceeded("total complexity overflows 64 bits");
    return a + b;
  };
  for (const auto& c : model.constraints()) {
    r.constraint_dims.push_back(c.dim());
    r.kappa = std::max(r.kappa, c.dim());
    r.kappa_plus += c.dim();
    r.kappa_tot = add(r.kappa_tot, checked_power(q, c.dim()));
  }
  for (auto d : model.state_dims()) {
    r.state_dims.push_back(d);
    r.sigma = std::max(r.sigma, d);
    r.sigma_plus += d;
    r.sigma_tot = add(r.sigma_tot, checked_power(q, d));
  }
  return r;
}

}  // namespace graphreal
