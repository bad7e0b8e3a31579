#include "graphreal/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace graphreal {

Tree LeafLabeledTree::to_tree(std::span<const std::string> leaf_labels) const {
  if (leaf_labels.size() != leaves) throw ValidationError("to_tree: wrong number of leaf labels");
  std::vector<std::string> labels(leaf_labels.begin(), leaf_labels.end());
  for (std::size_t j = leaves; j < nodes; ++j) labels.push_back("#" + std::to_string(j - leaves));
  return Tree(Graph(std::move(labels), edges));
}

std::uint64_t cubic_tree_count(std::size_t n_leaves) {
  if (n_leaves < 3) return 1;
  std::uint64_t c = 1;
  for (std::uint64_t k = 3; k <= 2 * n_leaves - 5; k += 2) c *= k;
  return c;
}

namespace {

struct CubicBuilder {
  std::size_t n;
  const std::function<bool(const LeafLabeledTree&)>& visit;
  LeafLabeledTree tree;

  bool grow(std::size_t next_leaf) {
    if (next_leaf == n) return visit(tree);
    const std::size_t existing = tree.edges.size();
    for (std::size_t e = 0; e < existing; ++e) {
      const Edge old = tree.edges[e];
      const VertexId mid = tree.nodes++;
      tree.edges[e] = {old.u, mid};
      tree.edges.push_back({mid, old.v});
      tree.edges.push_back({mid, next_leaf});
      const bool go_on = grow(next_leaf + 1);
      tree.edges.pop_back();
      tree.edges.pop_back();
      tree.edges[e] = old;
      --tree.nodes;
      if (!go_on) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_cubic_tree(std::size_t n_leaves, std::uint64_t limit,
                         const std::function<bool(const LeafLabeledTree&)>& visit) {
  if (n_leaves < 3) throw ValidationError("cubic trees need at least 3 leaves");
  if (n_leaves > 32 || cubic_tree_count(n_leaves) > limit) {
    throw GuardExceeded("cubic-tree enumeration for n = " + std::to_string(n_leaves) +
                        " exceeds the enumeration limit");
  }
  CubicBuilder b{n_leaves, visit, {}};
  b.tree.leaves = n_leaves;
  // Leaf ids are 0..n-1; internal nodes are allocated from n upward.
  b.tree.nodes = n_leaves + 1;
  b.tree.edges = {{0, n_leaves}, {1, n_leaves}, {2, n_leaves}};
  b.grow(3);
}

std::uint64_t path_ordering_count(std::size_t n) {
  if (n <= 1) return 1;
  std::uint64_t c = 1;
  for (std::uint64_t k = 3; k <= n; ++k) {
    if (c > UINT64_MAX / k) return UINT64_MAX;
    c *= k;
  }
  return c;
}

void for_each_path_ordering(std::size_t n, std::uint64_t limit,
                            const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (path_ordering_count(n) > limit) {
    throw GuardExceeded("path-ordering enumeration for n = " + std::to_string(n) +
                        " exceeds the enumeration limit");
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    if (n >= 2 && perm.front() > perm.back()) continue;
    if (!visit(perm)) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

namespace {

std::string canonical_rooted(const std::vector<std::vector<std::size_t>>& adj, std::size_t v, std::size_t parent) {
  std::vector<std::string> kids;
  for (auto u : adj[v]) {
    if (u != parent) kids.push_back(canonical_rooted(adj, u, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

}  // namespace

std::vector<std::vector<Edge>> free_trees(std::size_t nodes) {
  if (nodes == 0) return {};
  if (nodes > 16) throw GuardExceeded("free-tree enumeration is limited to 16 nodes");
  // Grow level by level: attach a leaf anywhere, keep one tree per
  // isomorphism class (least rooted canonical string over all roots).
  std::vector<std::vector<Edge>> level{{}};
  for (std::size_t m = 2; m <= nodes; ++m) {
    std::map<std::string, std::vector<Edge>> next;
    for (const auto& edges : level) {
      for (std::size_t attach = 0; attach + 1 < m; ++attach) {
        auto grown = edges;
        grown.push_back({attach, m - 1});
        std::vector<std::vector<std::size_t>> adj(m);
        for (const auto& e : grown) {
          adj[e.u].push_back(e.v);
          adj[e.v].push_back(e.u);
        }
        std::string best;
        for (std::size_t r = 0; r < m; ++r) {
          auto s = canonical_rooted(adj, r, m);
          if (best.empty() || s < best) best = std::move(s);
        }
        next.emplace(std::move(best), std::move(grown));
      }
    }
    level.clear();
    for (auto& [key, edges] : next) level.push_back(std::move(edges));
  }
  return level;
}

}  // namespace graphreal
