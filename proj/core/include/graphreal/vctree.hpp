#pragma once

#include <vector>

#include "graphreal/tree.hpp"

namespace graphreal {

/// A tree T with a bag beta(z) of target-graph vertices at every node.
struct VertexCutTree {
  Tree tree;
  std::vector<VertexSet> beta;
};

/// Same shape, read as a tree decomposition of the target graph.
struct GraphTreeDecomposition {
  Tree tree;
  std::vector<VertexSet> beta;
};

/// Coverage, running intersection, and a star partition (beta(z), V_1..V_d)
/// at every node z, with V_i the vertices of branch i not in beta(z).
Check validate_vctree(const Graph& g, const VertexCutTree& vct);

/// Max bag size. Throws ValidationError for an invalid vertex-cut tree.
std::size_t vc_width(const Graph& g, const VertexCutTree& vct);

/// Coverage, running intersection, and every edge inside some bag.
Check validate_tree_decomposition(const Graph& g, const GraphTreeDecomposition& td);

/// Max bag size minus one.
std::size_t td_width(const Graph& g, const GraphTreeDecomposition& td);

/// The same (T, beta) read as a vertex-cut tree; throws for invalid input.
VertexCutTree td_as_vctree(const Graph& g, const GraphTreeDecomposition& td);

/// One node holding every vertex.
VertexCutTree trivial_vctree(const Graph& g);

/// The components V_1..V_d of the star partition induced at node z.
std::vector<VertexSet> induced_parts(const VertexCutTree& vct, VertexId z);

}  // namespace graphreal
