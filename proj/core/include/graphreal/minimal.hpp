#pragma once

#include <cstdint>
#include <vector>

#include "graphreal/code.hpp"
#include "graphreal/model.hpp"
#include "graphreal/tree.hpp"

namespace graphreal {

/// A graph decomposition whose graph is a tree.
class CodeTreeDecomposition {
 public:
  CodeTreeDecomposition() = default;
  CodeTreeDecomposition(Tree tree, std::vector<std::string> index_set, std::vector<VertexId> omega);
  explicit CodeTreeDecomposition(const GraphDecomposition& d);

  const Tree& tree() const { return tree_; }
  const GraphDecomposition& decomposition() const { return decomposition_; }

 private:
  Tree tree_;
  GraphDecomposition decomposition_;
};

/// The path p0 - p1 - ... with coordinate ordering[i] of `code` on p_i.
CodeTreeDecomposition path_decomposition(const LinearCode& code, std::span<const std::size_t> ordering);

/// dim C - dim C_J(e) - dim C_Jbar(e).
std::size_t dim_state(const LinearCode& code, const CodeTreeDecomposition& td, EdgeId e);
/// dim C - sum over branches T_i of T - v of dim C_{J_i}.
std::size_t dim_constraint(const LinearCode& code, const CodeTreeDecomposition& td, VertexId v);

struct MinimalDims {
  std::vector<std::size_t> state;
  std::vector<std::size_t> constraint;
};
MinimalDims minimal_dims(const LinearCode& code, const CodeTreeDecomposition& td);

/// The minimal tree realization. The state of codeword c on edge e is the
/// coset c|_J + C_J, J the preimage of the side of e holding the
/// least-labelled tree vertex, written as the RREF-reduced representative
/// read off at the pivot columns of the reduced projection.
GraphicalModel build_minimal(const LinearCode& code, const CodeTreeDecomposition& td);

/// max_v dim_constraint(v).
std::size_t kappa_of_tree_decomp(const LinearCode& code, const CodeTreeDecomposition& td);

/// Path kappa for a bijective ordering of the coordinates.
std::size_t kappa_of_ordering(const CrossSectionTable& table, std::span<const std::size_t> ordering);

struct TreeSearchResult {
  std::size_t kappa = 0;
  CodeTreeDecomposition witness;
  std::uint64_t candidates = 0;
};

/// Minimum kappa over leaf-labelled cubic trees with the coordinates on the
/// leaves (one- and two-coordinate codes use the single vertex / single edge).
TreeSearchResult kappa_tree_exact(const LinearCode& code, std::uint64_t limit = Guards{}.enumeration_limit());

struct PathSearchResult {
  std::size_t kappa = 0;
  std::vector<std::size_t> ordering;
  CodeTreeDecomposition witness;
  std::uint64_t candidates = 0;
};

/// Minimum path kappa over orderings up to reversal; first optimum wins.
PathSearchResult kappa_path_exact(const LinearCode& code, std::uint64_t limit = Guards{}.enumeration_limit());

}  // namespace graphreal
