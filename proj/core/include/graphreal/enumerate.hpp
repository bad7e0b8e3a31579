#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "graphreal/tree.hpp"

namespace graphreal {

/// A tree whose first `leaves` vertex ids are the labelled leaves; the
/// remaining ids are internal nodes.
struct LeafLabeledTree {
  std::size_t leaves = 0;
  std::size_t nodes = 0;
  std::vector<Edge> edges;

  /// Leaf i gets label leaf_labels[i]; internal nodes are named "#0", "#1", ...
  Tree to_tree(std::span<const std::string> leaf_labels) const;
};

/// (2n-5)!!, the number of leaf-labelled cubic trees with n >= 3 leaves.
std::uint64_t cubic_tree_count(std::size_t n_leaves);

/// Every leaf-labelled cubic tree with n_leaves leaves, exactly once, in a
/// fixed order: leaf i (i >= 3) is inserted by subdividing each existing
/// edge in turn. The visitor returns false to stop early.
void for_each_cubic_tree(std::size_t n_leaves, std::uint64_t limit,
                         const std::function<bool(const LeafLabeledTree&)>& visit);

/// n!/2 for n >= 2, 1 for n <= 1.
std::uint64_t path_ordering_count(std::size_t n);

/// Permutations of 0..n-1 up to reversal (those with first < last), in
/// lexicographic order.
void for_each_path_ordering(std::size_t n, std::uint64_t limit,
                            const std::function<bool(std::span<const std::size_t>)>& visit);

/// Non-isomorphic trees on `nodes` vertices, as edge lists over 0..nodes-1.
std::vector<std::vector<Edge>> free_trees(std::size_t nodes);

}  // namespace graphreal
