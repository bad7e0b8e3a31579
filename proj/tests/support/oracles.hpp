#pragma once

// Brute-force reference implementations. Everything here works from
// explicit codeword lists and raw set definitions, never from the rank
// formulas the library uses.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "graphreal/code.hpp"
#include "graphreal/minimal.hpp"
#include "graphreal/model.hpp"
#include "graphreal/vctree.hpp"

namespace graphreal::testing {

using Word = std::vector<Element>;

/// All q^k codewords, by running every coefficient vector through the generators.
std::vector<Word> codewords(const LinearCode& code);

/// Exponent e with q^e == count; aborts the test if count is not a power of q.
std::size_t log_q(std::size_t count, std::uint32_t q);

Word restrict(const Word& w, const std::vector<std::size_t>& positions);

/// dim C|_J by counting distinct restrictions.
std::size_t oracle_projection_dim(const LinearCode& code, const std::vector<std::size_t>& positions);
/// dim C_J by counting codewords that vanish outside J.
std::size_t oracle_cross_section_dim(const LinearCode& code, const std::vector<std::size_t>& positions);
std::size_t oracle_min_distance(const LinearCode& code);

/// Number of cosets of C_J met by C|_J, as a dimension: counts distinct
/// canonical coset representatives (least element of x + C_J).
std::size_t oracle_coset_dim(const LinearCode& code, const std::vector<std::size_t>& positions);

/// Minimal-realization dimensions from coset counting: the state at e is the
/// coset of c on one side; the constraint at v is (c at v, coset on each branch).
MinimalDims minimal_dims_by_cosets(const LinearCode& code, const CodeTreeDecomposition& td);

/// Coverage, running intersection and the star condition straight from the definition, subtrees by BFS.
bool vctree_valid(const Graph& g, const VertexCutTree& vct);
bool tree_decomposition_valid(const Graph& g, const GraphTreeDecomposition& td);

/// Deterministic generator; distributions are written out so runs agree
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(unsigned num, unsigned den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

/// Coordinates labelled "1".."n".
std::vector<std::string> numeric_labels(std::size_t n);
LinearCode random_code(Rng& rng, std::uint32_t q, std::size_t n, std::size_t max_rows);
/// Uniform labelled tree from a Pruefer sequence; vertices prefix0.. .
Tree random_tree(Rng& rng, std::size_t nodes, const std::string& prefix = "t");
/// Random spanning tree plus each other pair with probability num/den.
Graph random_connected_graph(Rng& rng, std::size_t n, unsigned num, unsigned den);
GraphDecomposition random_decomposition(Rng& rng, const LinearCode& code, const Graph& g);

struct GeneratedDecomposition {
  Graph graph;
  GraphTreeDecomposition td;
};
/// A connected graph on <= max_vertices vertices together with a valid tree
/// decomposition: each vertex gets a random connected subtree, and edges are
/// drawn only between vertices sharing a node.
GeneratedDecomposition random_tree_decomposition(Rng& rng, std::size_t max_vertices);

/// A random (generally non-essential) model on `d`: random state dims in
/// [0, max_state] and random constraint codes on each local index.
GraphicalModel random_model(Rng& rng, const GraphDecomposition& d, Field field, std::size_t max_state);

}  // namespace graphreal::testing
