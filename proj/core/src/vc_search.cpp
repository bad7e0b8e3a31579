#include "graphreal/vc_search.hpp"

#include <algorithm>
#include <functional>

#include "graphreal/enumerate.hpp"

namespace graphreal {

std::size_t vc_lower_bound(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  return is_biconnected(g) ? 2 : 1;
}

namespace {

Tree labelled_tree(std::size_t m, const std::vector<Edge>& edges) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("z" + std::to_string(i));
  return Tree(Graph(std::move(labels), edges));
}

std::vector<Edge> path_edges(std::size_t m) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < m; ++i) edges.push_back({i - 1, i});
  return edges;
}

// Assigns each graph vertex a connected set of tree nodes (its occurrence
// subtree). Given coverage and running intersection, the star-partition
// condition at every node is equivalent to: adjacent graph vertices have
// occurrence subtrees that meet or are joined by a tree edge.
struct Assigner {
  const Graph& g;
  std::size_t m;
  std::size_t width;
  std::vector<std::uint64_t> subsets;     // connected node sets of T
  std::vector<std::uint64_t> closure;     // per subset: itself plus adjacent nodes
  std::vector<VertexId> order;            // graph vertices, BFS order
  std::vector<std::size_t> assigned;      // index into subsets, per vertex
  std::vector<std::size_t> load;          // per tree node
  std::uint64_t explored = 0;

  bool run(std::size_t pos) {
    ++explored;
    if (pos == order.size()) return finish();
    const VertexId v = order[pos];
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      const std::uint64_t nodes = subsets[s];
      bool ok = true;
      for (auto b = nodes; b && ok; b &= b - 1) ok = load[std::countr_zero(b)] < width;
      if (!ok) continue;
      for (auto u : g.neighbors(v).to_vector()) {
        if (assigned[u] == SIZE_MAX) continue;
        if ((closure[assigned[u]] & nodes) == 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      assigned[v] = s;
      for (auto b = nodes; b; b &= b - 1) ++load[std::countr_zero(b)];
      if (run(pos + 1)) return true;
      for (auto b = nodes; b; b &= b - 1) --load[std::countr_zero(b)];
      assigned[v] = SIZE_MAX;
    }
    return false;
  }

  bool finish() const {
    std::vector<VertexSet> bags = beta();
    for (std::size_t z = 0; z < m; ++z) {
      if (bags[z].empty()) return false;
      for (std::size_t y = 0; y < z; ++y) {
        if (bags[y] == bags[z]) return false;
      }
    }
    return true;
  }

  std::vector<VertexSet> beta() const {
    std::vector<VertexSet> bags(m);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      for (auto b = subsets[assigned[v]]; b; b &= b - 1) bags[std::countr_zero(b)].insert(v);
    }
    return bags;
  }
};

std::vector<VertexId> bfs_order(const Graph& g) {
  std::vector<VertexId> order;
  VertexSet seen;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (seen.contains(s)) continue;
    seen.insert(s);
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
      for (auto u : g.neighbors(order[i]).to_vector()) {
        if (!seen.contains(u)) {
          seen.insert(u);
          order.push_back(u);
        }
      }
    }
  }
  return order;
}

void connected_subsets(std::size_t m, const std::vector<Edge>& edges, std::vector<std::uint64_t>& subsets,
                       std::vector<std::uint64_t>& closure) {
  std::vector<std::uint64_t> adj(m, 0);
  for (const auto& e : edges) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  subsets.clear();
  closure.clear();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
    // Grow from the lowest node inside s.
    std::uint64_t reach = s & -s;
    for (;;) {
      std::uint64_t next = reach;
      for (auto b = reach; b; b &= b - 1) next |= adj[std::countr_zero(b)] & s;
      if (next == reach) break;
      reach = next;
    }
    if (reach != s) continue;
    std::uint64_t c = s;
    for (auto b = s; b; b &= b - 1) c |= adj[std::countr_zero(b)];
    subsets.push_back(s);
    closure.push_back(c);
  }
}

}  // namespace

WidthResult vc_treewidth_exact(const Graph& g, std::size_t node_budget, bool paths_only, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices) {
    throw GuardExceeded("exact vc search on " + std::to_string(n) + " vertices exceeds the limit of " +
                        std::to_string(max_vertices));
  }
  if (node_budget == 0) node_budget = std::max<std::size_t>(n, 1);
  if (node_budget > 16) throw GuardExceeded("exact vc search is limited to 16 tree nodes");
  WidthResult result;
  result.asserted_lower_bound = vc_lower_bound(g);
  result.certainty = Certainty::exact;
  result.family = std::string(paths_only ? "paths" : "trees") + " with at most " + std::to_string(node_budget) +
                  " nodes, nonempty pairwise-distinct bags";
  if (n == 0) {
    result.witness = {labelled_tree(1, {}), {VertexSet{}}};
    return result;
  }

  const auto order = bfs_order(g);
  std::vector<std::vector<std::vector<Edge>>> shapes(node_budget + 1);
  for (std::size_t m = 1; m <= node_budget; ++m) {
    shapes[m] = paths_only ? std::vector<std::vector<Edge>>{path_edges(m)} : free_trees(m);
  }
  for (std::size_t w = 1; w <= n; ++w) {
    for (std::size_t m = 1; m <= node_budget; ++m) {
      for (const auto& edges : shapes[m]) {
        Assigner a{g, m, w, {}, {}, order, std::vector<std::size_t>(n, SIZE_MAX), std::vector<std::size_t>(m, 0)};
        connected_subsets(m, edges, a.subsets, a.closure);
        const bool found = a.run(0);
        result.explored += a.explored;
        if (!found) continue;
        result.value = w;
        result.witness = {labelled_tree(m, edges), a.beta()};
        if (result.value < result.asserted_lower_bound) {
          throw std::logic_error("exact vc search undercut the biconnected lower bound");
        }
        return result;
      }
    }
  }
  throw std::logic_error("exact vc search found no vertex-cut tree");
}

GraphTreeDecomposition min_fill_decomposition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {labelled_tree(1, {}), {VertexSet{}}};
  std::vector<VertexSet> adj(n);
  for (VertexId v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  VertexSet alive = g.all();
  std::vector<VertexId> eliminated;
  std::vector<VertexSet> bag(n);
  std::vector<std::size_t> position(n);

  while (!alive.empty()) {
    VertexId best = n;
    std::size_t best_fill = SIZE_MAX;
    for (auto v : alive.to_vector()) {
      const auto nb = (adj[v] & alive).to_vector();
      std::size_t fill = 0;
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (!adj[nb[i]].contains(nb[j])) ++fill;
        }
      }
      if (fill < best_fill || (fill == best_fill && g.label(v) < g.label(best))) {
        best = v;
        best_fill = fill;
      }
    }
    const VertexSet nb = adj[best] & alive;
    for (auto u : nb.to_vector()) adj[u] |= nb - VertexSet::single(u);
    bag[best] = nb | VertexSet::single(best);
    position[best] = eliminated.size();
    eliminated.push_back(best);
    alive.erase(best);
  }

  // Node i is the bag of the i-th eliminated vertex; its parent is the bag of
  // the earliest-eliminated later neighbour, or the next root for a new component.
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const VertexId v = eliminated[i];
    std::size_t parent = n;
    for (auto u : (bag[v] - VertexSet::single(v)).to_vector()) parent = std::min(parent, position[u]);
    if (parent == n) parent = i + 1;
    edges.push_back({i, parent});
  }
  std::vector<VertexSet> beta;
  for (auto v : eliminated) beta.push_back(bag[v]);
  return {labelled_tree(n, edges), std::move(beta)};
}

WidthResult vc_treewidth_upper(const Graph& g) {
  const GraphTreeDecomposition td = min_fill_decomposition(g);
  WidthResult r;
  r.witness = td_as_vctree(g, td);
  r.value = vc_width(g, r.witness);
  r.asserted_lower_bound = vc_lower_bound(g);
  r.certainty = Certainty::upper_bound;
  r.family = "min-fill tree decomposition";
  return r;
}

namespace {

VertexCutTree shrink(const Graph& g, VertexCutTree vct) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId z = 0; z < vct.beta.size(); ++z) {
      for (auto v : vct.beta[z].to_vector()) {
        vct.beta[z].erase(v);
        if (!vct.beta[z].empty() && validate_vctree(g, vct)) {
          changed = true;
        } else {
          vct.beta[z].insert(v);
        }
      }
    }
  }
  return vct;
}

std::size_t max_bag(const VertexCutTree& vct) {
  std::size_t w = 0;
  for (const auto& b : vct.beta) w = std::max(w, b.size());
  return w;
}

}  // namespace

WidthResult vc_pathwidth_upper(const Graph& g) {
  const std::size_t n = g.vertex_count();
  WidthResult best;
  best.asserted_lower_bound = vc_lower_bound(g);
  best.family = "greedy vertex-separation path, bags shrunk greedily";
  if (n == 0) {
    best.witness = {labelled_tree(1, {}), {VertexSet{}}};
    best.certainty = Certainty::exact;
    return best;
  }
  best.value = SIZE_MAX;
  for (VertexId start = 0; start < n; ++start) {
    std::vector<VertexId> order{start};
    VertexSet placed = VertexSet::single(start);
    while (order.size() < n) {
      VertexId pick = n;
      std::size_t pick_front = SIZE_MAX;
      for (VertexId v = 0; v < n; ++v) {
        if (placed.contains(v)) continue;
        const VertexSet after = placed | VertexSet::single(v);
        std::size_t front = 0;
        for (auto u : after.to_vector()) {
          if (!(g.neighbors(u) - after).empty()) ++front;
        }
        if (front < pick_front) {
          pick = v;
          pick_front = front;
        }
      }
      order.push_back(pick);
      placed.insert(pick);
    }
    // Path decomposition: bag i holds order[i] and every earlier vertex
    // that still has a neighbour at or after position i.
    std::vector<VertexSet> beta(n);
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    for (std::size_t i = 0; i < n; ++i) {
      beta[i].insert(order[i]);
      for (std::size_t j = 0; j < i; ++j) {
        for (auto u : g.neighbors(order[j]).to_vector()) {
          if (pos[u] >= i) beta[i].insert(order[j]);
        }
      }
    }
    VertexCutTree vct = shrink(g, {labelled_tree(n, path_edges(n)), std::move(beta)});
    const std::size_t w = max_bag(vct);
    if (w < best.value) {
      best.value = w;
      best.witness = std::move(vct);
    }
    ++best.explored;
    if (best.value == best.asserted_lower_bound) break;
  }
  best.certainty = best.value == best.asserted_lower_bound ? Certainty::exact : Certainty::upper_bound;
  return best;
}

}  // namespace graphreal
