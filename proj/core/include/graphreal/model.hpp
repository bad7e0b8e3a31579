#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphreal/code.hpp"
#include "graphreal/graph.hpp"

namespace graphreal {

/// A connected graph plus an index map from code coordinates to vertices.
class GraphDecomposition {
 public:
  GraphDecomposition() = default;
  GraphDecomposition(Graph graph, std::vector<std::string> index_set, std::vector<VertexId> omega);
  /// `vertex_of[i]` is the label of the vertex carrying index_set[i].
  static GraphDecomposition from_labels(Graph graph, std::vector<std::string> index_set,
                                        const std::vector<std::string>& vertex_of);

  const Graph& graph() const { return graph_; }
  const std::vector<std::string>& index_set() const { return index_set_; }
  const std::vector<VertexId>& omega() const { return omega_; }
  VertexId omega(std::size_t position) const { return omega_[position]; }

  /// Positions i (in index order) with omega(i) in `vertices`.
  std::vector<std::size_t> preimage(VertexSet vertices) const;
  CoordinateMask preimage_mask(VertexSet vertices) const;

  /// Throws ValidationError unless `code` lives on this index set.
  void require_code(const LinearCode& code) const;

 private:
  Graph graph_;
  std::vector<std::string> index_set_;
  std::vector<VertexId> omega_;
};

/// State spaces are full coordinate spaces F^{state_dims[e]}; constraint
/// C_v lives on local_index(v): the symbols at v in index order, followed by
/// the state coordinates of each incident edge in edge-id order.
class GraphicalModel {
 public:
  GraphicalModel() = default;
  GraphicalModel(GraphDecomposition decomposition, Field field, std::vector<std::size_t> state_dims,
                 std::vector<LinearCode> constraints);

  const GraphDecomposition& decomposition() const { return decomposition_; }
  const Graph& graph() const { return decomposition_.graph(); }
  Field field() const { return field_; }
  const std::vector<std::size_t>& state_dims() const { return state_dims_; }
  const std::vector<LinearCode>& constraints() const { return constraints_; }
  const LinearCode& constraint(VertexId v) const { return constraints_[v]; }

  /// "(e<id>,<j>)" for coordinate j of the state space on edge `id`.
  static std::string state_label(EdgeId e, std::size_t j);
  static std::vector<std::string> local_index(const GraphDecomposition& d,
                                              const std::vector<std::size_t>& state_dims, VertexId v);
  std::vector<std::string> state_labels(EdgeId e) const;
  std::vector<std::string> local_index(VertexId v) const { return local_index(decomposition_, state_dims_, v); }
  /// Symbols in index order, then state coordinates edge by edge.
  std::vector<std::string> global_index() const;
  std::size_t variable_count() const;

 private:
  GraphDecomposition decomposition_;
  Field field_;
  std::vector<std::size_t> state_dims_;
  std::vector<LinearCode> constraints_;
};

/// The set of valid global configurations, on global_index(). Throws
/// GuardExceeded when the model has more than `max_variables` variables.
LinearCode full_behavior(const GraphicalModel& model, std::size_t max_variables = Guards{}.behavior_variables);

/// Replaces every C_v by B|_v and every S_e by B|_e. A state space that
/// shrank is re-coordinatised on the pivot coordinates of B|_e, which is an
/// isomorphism onto B|_e, so state spaces stay full coordinate spaces.
GraphicalModel essentialize(const GraphicalModel& model,
                            std::size_t max_variables = Guards{}.behavior_variables);

Check check_essential(const GraphicalModel& model, const LinearCode& behavior);

/// Essential and B|_I = code.
Check verify_realization(const GraphicalModel& model, const LinearCode& code,
                         std::size_t max_variables = Guards{}.behavior_variables);

struct ComplexityReport {
  std::size_t kappa = 0;
  std::size_t kappa_plus = 0;
  std::uint64_t kappa_tot = 0;
  std::size_t sigma = 0;
  std::size_t sigma_plus = 0;
  std::uint64_t sigma_tot = 0;
  std::vector<std::size_t> constraint_dims;
  std::vector<std::size_t> state_dims;
};

ComplexityReport measure(const GraphicalModel& model);

}  // namespace graphreal
