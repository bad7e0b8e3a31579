#include "graphreal/tree.hpp"

#include <algorithm>
#include <array>

namespace graphreal {

Tree::Tree(Graph g) : graph_(std::move(g)) {
  if (graph_.vertex_count() == 0) throw ValidationError("a tree needs at least one vertex");
  if (graph_.edge_count() + 1 != graph_.vertex_count() || !graph_.connected()) {
    throw ValidationError("graph is not a tree");
  }
}

VertexSet Tree::branch(VertexId z, VertexId toward) const {
  const auto comps = graph_.components(graph_.all() - VertexSet::single(z));
  for (const auto& c : comps) {
    if (c.contains(toward)) return c;
  }
  throw ValidationError("branch: vertex is not adjacent");
}

std::vector<VertexSet> Tree::branches(VertexId z) const {
  std::vector<VertexSet> out;
  const auto comps = graph_.components(graph_.all() - VertexSet::single(z));
  for (auto e : graph_.incident(z)) {
    const VertexId u = graph_.edge(e).other(z);
    for (const auto& c : comps) {
      if (c.contains(u)) out.push_back(c);
    }
  }
  return out;
}

std::pair<VertexSet, VertexSet> Tree::sides(EdgeId e) const {
  const std::array<EdgeId, 1> cut{e};
  auto comps = graph_.components_without_edges(cut);
  const VertexId least = graph_.least_vertex();
  if (!comps[0].contains(least)) std::swap(comps[0], comps[1]);
  return {comps[0], comps[1]};
}

std::vector<VertexId> Tree::path(VertexId x, VertexId y) const {
  std::vector<VertexId> parent(size(), size());
  std::vector<VertexId> stack{x};
  parent[x] = x;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (auto u : graph_.neighbors(v).to_vector()) {
      if (parent[u] != size()) continue;
      parent[u] = v;
      stack.push_back(u);
    }
  }
  std::vector<VertexId> out{y};
  while (out.back() != x) out.push_back(parent[out.back()]);
  std::reverse(out.begin(), out.end());
  return out;
}

bool Tree::is_path() const {
  for (VertexId v = 0; v < size(); ++v) {
    if (graph_.degree(v) > 2) return false;
  }
  return true;
}

}  // namespace graphreal
