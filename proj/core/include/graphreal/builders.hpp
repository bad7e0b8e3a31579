#pragma once

#include "graphreal/minimal.hpp"
#include "graphreal/model.hpp"

namespace graphreal {

/// Star graph: a hub "hub" with one leaf "leaf:<label>" per coordinate.
GraphDecomposition star_decomposition(const LinearCode& code);

/// The raw star model: every state space is F^1, leaf constraints are
/// [2,1] repetition codes, the hub carries the code on its state indices.
/// Not essential when the code has an all-zero coordinate.
GraphicalModel star_model(const LinearCode& code);

/// Essential star realization: state dims are dim C|_{i}.
GraphicalModel build_star(const LinearCode& code);

/// Minimal realization on the breadth-first spanning tree of decomp.graph,
/// with zero-dimensional states on the remaining edges.
GraphicalModel extend_via_spanning_tree(const LinearCode& code, const GraphDecomposition& decomp);

/// Every edge carries the message u in F^k; vertex v enforces
/// (u G restricted to v, u, ..., u). Essential on any connected graph.
GraphicalModel build_broadcast(const LinearCode& code, const GraphDecomposition& decomp);

}  // namespace graphreal
