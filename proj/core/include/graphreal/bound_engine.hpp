#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphreal/minimal.hpp"
#include "graphreal/vc_search.hpp"
#include "graphreal/vctree.hpp"

namespace graphreal {

struct MuReport {
  std::vector<std::size_t> m;
  std::size_t mu = 0;
  /// First node attaining mu, by label.
  VertexId argmax = 0;
};

/// m(z) = dim C - sum_i dim C_{J_i}, J_i the preimage of V_i at node z.
MuReport mu(const LinearCode& code, const GraphDecomposition& decomp, const VertexCutTree& vct);

struct AlphaMap {
  VertexId root = 0;
  std::vector<VertexSet> alpha;
};

/// alpha(root) = beta(root); alpha(z) = beta(z) minus the bags on (z, root].
/// Throws std::logic_error if the partition or branch identities fail.
AlphaMap build_alpha(const Graph& g, const VertexCutTree& vct, VertexId root);

/// gamma(i) = the node z with omega(i) in alpha(z).
CodeTreeDecomposition build_gamma(const LinearCode& code, const GraphDecomposition& decomp,
                                  const VertexCutTree& vct, const AlphaMap& alpha);

struct LowerBoundCertificate {
  std::size_t bound = 0;
  MuReport mu;
  AlphaMap alpha;
  CodeTreeDecomposition gamma;
  /// kappa(C; T, gamma), computed from the minimal-realization formula.
  std::size_t kappa_gamma = 0;
  std::size_t vc_width = 0;
};

/// ceil(mu / vc-width), with z* = argmax m(z); checks kappa(C;T,gamma) = mu.
LowerBoundCertificate theorem_bound(const LinearCode& code, const GraphDecomposition& decomp,
                                    const VertexCutTree& vct);

/// A width or code-complexity value with where it came from.
struct SourcedValue {
  std::size_t value = 0;
  bool exact = true;
  std::string source;
};

struct CorollaryReport {
  std::optional<SourcedValue> kappa_tree_code;
  std::optional<SourcedValue> kappa_path_code;
  std::optional<SourcedValue> vc_tree_graph;
  std::optional<SourcedValue> vc_path_graph;
  /// ceil(kappa_tree(C) / vc-tree(G)) and ceil(kappa_path(C) / vc-path(G)).
  std::optional<std::size_t> tree_bound;
  std::optional<std::size_t> path_bound;
  /// True when a denominator is only an upper bound (the bound is still valid).
  bool weakened = false;

  std::size_t best() const;
};

struct CorollaryInputs {
  std::optional<SourcedValue> kappa_tree_code;
  std::optional<SourcedValue> kappa_path_code;
  std::optional<SourcedValue> vc_tree_graph;
  std::optional<SourcedValue> vc_path_graph;
};

/// Fills missing inputs where that is affordable (exact code searches within
/// the guard, exact vc search on small graphs, heuristics otherwise), then
/// evaluates both corollary bounds. Throws ValidationError when neither
/// bound can be formed.
CorollaryReport corollary_bounds(const LinearCode& code, const Graph& g, CorollaryInputs inputs,
                                 const Guards& guards = Guards{});

}  // namespace graphreal
