#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphreal/model.hpp"
#include "graphreal/simplex.hpp"

namespace graphreal {

enum class CutKind { edge_cut, vertex_cut };

/// Right-hand side of an Edge-Cut or Vertex-Cut inequality. For an edge cut
/// `edges` is X and `parts` is (V', V''); for a vertex cut `center` is V0 and
/// `parts` are V1..Vd.
struct CutBoundResult {
  CutKind kind = CutKind::vertex_cut;
  VertexSet center;
  std::vector<VertexSet> parts;
  std::vector<EdgeId> edges;
  std::int64_t rhs = 0;
  /// Which sum the bound constrains.
  std::string lhs_description;

  bool vacuous() const { return rhs <= 0; }
};

/// dim C - dim C_J' - dim C_J''; requires that X separates V' from V''.
CutBoundResult edge_cut_rhs(const LinearCode& code, const GraphDecomposition& decomp, VertexSet side_a,
                            VertexSet side_b, std::span<const EdgeId> cut);

/// dim C - sum_i dim C_{J_i}; requires a valid star partition.
CutBoundResult vertex_cut_rhs(const LinearCode& code, const GraphDecomposition& decomp, const StarPartition& sp);

/// lambda(W): the vertex-cut right-hand side for (W, components of G - W).
CutBoundResult lambda(const LinearCode& code, const GraphDecomposition& decomp, VertexSet w);

/// The tree model on the star with hub V0 and one leaf per part, whose
/// constraints are projections of the full behavior of `model`. Leaf i's
/// state is the behavior on the edges X_i leaving V_i, re-coordinatised on
/// its pivot columns. Vertex labels are "V0", "V1", ...
GraphicalModel star_tree_model(const GraphicalModel& model, const StarPartition& sp,
                               std::size_t max_variables = Guards{}.behavior_variables);

/// All vertex subsets of size 1..max_size whose removal disconnects the
/// graph, by size then lexicographically by vertex id, followed by V itself.
std::vector<VertexSet> default_cuts(const Graph& g, std::size_t max_size);

struct LpBound {
  Rational value;
  /// Optimal xi per vertex (primal).
  std::vector<Rational> xi;
  /// Optimal multipliers per cut (dual packing solution).
  std::vector<Rational> y;
  std::vector<CutBoundResult> cuts;
  std::size_t pivots = 0;
};

/// min sum xi_v subject to sum_{w in W} xi_w >= lambda(W) for every cut W,
/// xi >= 0. Solved through its packing dual, which has a feasible slack
/// basis; both certificates are checked before returning.
LpBound lp_kappa_plus_lower_bound(const LinearCode& code, const GraphDecomposition& decomp,
                                  const std::vector<VertexSet>& cuts);

/// max over cuts of ceil(lambda(W) / |W|).
std::size_t kappa_lower_from_cuts(const LinearCode& code, const GraphDecomposition& decomp,
                                  const std::vector<VertexSet>& cuts);

/// Ceiling of a nonnegative rational.
std::uint64_t ceil_nonnegative(const Rational& r);

}  // namespace graphreal
