#pragma once

#include <cstdint>
#include <string>

#include "graphreal/vctree.hpp"

namespace graphreal {

enum class Certainty { exact, upper_bound };

struct WidthResult {
  std::size_t value = 0;
  VertexCutTree witness;
  Certainty certainty = Certainty::upper_bound;
  /// The candidate family searched (exact) or the heuristic used.
  std::string family;
  /// 2 for biconnected graphs on >= 3 vertices, else 1 (0 for no vertices).
  std::size_t asserted_lower_bound = 0;
  std::uint64_t explored = 0;
};

/// 2 if g is biconnected with >= 3 vertices, 1 if nonempty, else 0.
std::size_t vc_lower_bound(const Graph& g);

/// Least vc-width over vertex-cut trees with at most node_budget nodes
/// (0 means |V|) whose bags are nonempty and pairwise distinct. With
/// `paths_only` the trees are restricted to paths. Throws GuardExceeded
/// past `max_vertices`.
WidthResult vc_treewidth_exact(const Graph& g, std::size_t node_budget = 0, bool paths_only = false,
                               std::size_t max_vertices = Guards{}.vc_exact_vertices);

/// Min-fill elimination (ties by label); bag of v is v plus its neighbours
/// at elimination time, attached to the bag of the neighbour eliminated first.
GraphTreeDecomposition min_fill_decomposition(const Graph& g);

/// min_fill_decomposition read as a vertex-cut tree.
WidthResult vc_treewidth_upper(const Graph& g);

/// Vertex-cut paths from a greedy vertex-separation ordering (every start
/// vertex tried, ties by vertex id), after greedily dropping bag entries
/// while the path stays a vertex-cut tree. Reported exact when it meets
/// vc_lower_bound.
WidthResult vc_pathwidth_upper(const Graph& g);

}  // namespace graphreal
