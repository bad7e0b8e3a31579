#pragma once

#include <vector>

#include "graphreal/graph.hpp"

namespace graphreal {

/// A graph known to be connected and acyclic.
class Tree {
 public:
  Tree() = default;
  /// Throws ValidationError unless `g` is a tree.
  explicit Tree(Graph g);

  const Graph& graph() const { return graph_; }
  std::size_t size() const { return graph_.vertex_count(); }

  /// Components of T - z, one per neighbour of z in incidence order.
  std::vector<VertexSet> branches(VertexId z) const;
  /// The component of T - z that contains neighbour `toward`.
  VertexSet branch(VertexId z, VertexId toward) const;
  /// The two sides of T \ e: first the side containing the least-labelled
  /// vertex of T, then the other.
  std::pair<VertexSet, VertexSet> sides(EdgeId e) const;
  /// Vertices on the unique x-y path, in order, both ends included.
  std::vector<VertexId> path(VertexId x, VertexId y) const;
  bool is_path() const;

 private:
  Graph graph_;
};

}  // namespace graphreal
