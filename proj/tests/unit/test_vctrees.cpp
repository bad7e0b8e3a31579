#include <functional>

#include "doctest.h"
#include "graphreal/enumerate.hpp"
#include "graphreal/fixtures.hpp"
#include "graphreal/io.hpp"
#include "graphreal/vc_search.hpp"
#include "graphreal/vctree.hpp"
#include "helpers.hpp"

using namespace graphreal;
using namespace graphreal::testing;

namespace {

std::vector<std::string> node_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("n" + std::to_string(i));
  return out;
}

/// Least vc-width over every tree with <= max_nodes nodes and every bag map.
std::size_t brute_vc_width(const Graph& g, std::size_t max_nodes) {
  std::size_t best = g.vertex_count();
  const std::uint64_t subsets = std::uint64_t{1} << g.vertex_count();
  for (std::size_t nodes = 1; nodes <= max_nodes; ++nodes) {
    for (const auto& edges : free_trees(nodes)) {
      const Tree t(Graph(node_labels(nodes), edges));
      std::vector<VertexSet> beta(nodes);
      std::function<void(std::size_t)> rec = [&](std::size_t z) {
        if (z == nodes) {
          std::size_t w = 0;
          for (auto b : beta) w = std::max(w, b.size());
          if (w < best && vctree_valid(g, VertexCutTree{t, beta})) best = w;
          return;
        }
        for (std::uint64_t s = 0; s < subsets; ++s) {
          beta[z] = VertexSet(s);
          if (beta[z].size() >= best) continue;
          rec(z + 1);
        }
      };
      rec(0);
    }
  }
  return best;
}

VertexCutTree identity_vctree(const Tree& t) {
  std::vector<VertexSet> beta;
  for (VertexId v = 0; v < t.size(); ++v) beta.push_back(VertexSet::single(v));
  return {t, beta};
}

}  // namespace

TEST_CASE("trivial and cycle vertex-cut trees") {
  const auto g = cycle_graph(11);
  const auto triv = trivial_vctree(g);
  CHECK(validate_vctree(g, triv).ok);
  CHECK(vc_width(g, triv) == 11);

  auto vct = cycle_vctree(g);
  CHECK(validate_vctree(g, vct).ok);
  CHECK(vctree_valid(g, vct));
  CHECK(vc_width(g, vct) == 2);

  vct.beta[2] = VertexSet::of({1, 3});
  const auto check = validate_vctree(g, vct);
  CHECK_FALSE(check.ok);
  CHECK_FALSE(vctree_valid(g, vct));
  CHECK_THROWS_AS(vc_width(g, vct), ValidationError);
}

TEST_CASE("identity vertex-cut tree of a tree") {
  Rng rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = random_tree(rng, rng.between(1, 10));
    const auto vct = identity_vctree(t);
    CHECK(validate_vctree(t.graph(), vct).ok);
    CHECK(vc_width(t.graph(), vct) == 1);
  }
}

TEST_CASE("validator agrees with the definition on random bag maps") {
  Rng rng(2);
  int valid = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto g = random_connected_graph(rng, rng.between(1, 5), 1, 3);
    const auto t = random_tree(rng, rng.between(1, 4), "z");
    std::vector<VertexSet> beta(t.size());
    for (auto& b : beta) b = VertexSet(rng.below(std::uint64_t{1} << g.vertex_count()));
    const VertexCutTree vct{t, beta};
    const bool lib = validate_vctree(g, vct).ok;
    CHECK(lib == vctree_valid(g, vct));
    valid += lib ? 1 : 0;
    const GraphTreeDecomposition td{t, beta};
    CHECK(validate_tree_decomposition(g, td).ok == tree_decomposition_valid(g, td));
  }
  CHECK(valid > 100);
}

TEST_CASE("tree decompositions") {
  const auto g = cycle_graph(11);
  const auto mf = min_fill_decomposition(g);
  CHECK(validate_tree_decomposition(g, mf).ok);
  CHECK(td_width(g, mf) == 2);
  const auto as_vc = td_as_vctree(g, mf);
  CHECK(vc_width(g, as_vc) == 3);

  const GraphTreeDecomposition single{Tree(Graph({"z"}, std::vector<Edge>{})), {g.all()}};
  CHECK(validate_tree_decomposition(g, single).ok);
  const auto triv = td_as_vctree(g, single);
  CHECK(triv.beta == trivial_vctree(g).beta);

  // Cycle bags {v0, v_i} miss the edge v1-v2 unless widened: not a tree decomposition.
  const GraphTreeDecomposition cyc{cycle_vctree(g).tree, cycle_vctree(g).beta};
  CHECK_FALSE(validate_tree_decomposition(g, cyc).ok);

  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = random_connected_graph(rng, rng.between(1, 9), 1, 3);
    const auto d = min_fill_decomposition(h);
    CHECK(validate_tree_decomposition(h, d).ok);
    CHECK(tree_decomposition_valid(h, d));
    CHECK(validate_vctree(h, td_as_vctree(h, d)).ok);
  }
}

TEST_CASE("generated tree decompositions are vertex-cut trees") {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto gen = random_tree_decomposition(rng, 8);
    REQUIRE(tree_decomposition_valid(gen.graph, gen.td));
    CHECK(validate_vctree(gen.graph, VertexCutTree{gen.td.tree, gen.td.beta}).ok);
    CHECK(vctree_valid(gen.graph, VertexCutTree{gen.td.tree, gen.td.beta}));
  }
}

TEST_CASE("exact vc-treewidth of cycles and trees") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto g = cycle_graph(n);
    for (bool paths : {false, true}) {
      const auto r = vc_treewidth_exact(g, 0, paths);
      CHECK(r.value == 2);
      CHECK(r.certainty == Certainty::exact);
      CHECK(vctree_valid(g, r.witness));
      CHECK(vc_width(g, r.witness) == 2);
      if (paths) CHECK(r.witness.tree.is_path());
    }
  }
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = random_tree(rng, rng.between(1, 8));
    const auto r = vc_treewidth_exact(t.graph());
    CHECK(r.value == 1);
    CHECK(vctree_valid(t.graph(), r.witness));
  }
  // Two nodes splitting V in halves always form a vertex-cut tree.
  CHECK(vc_treewidth_exact(complete_graph(4)).value == 2);
  CHECK(vc_treewidth_exact(complete_graph(5)).value == 3);
  CHECK_THROWS_AS(vc_treewidth_exact(cycle_graph(9)), GuardExceeded);
}

TEST_CASE("exact search matches brute force beyond its node budget" * doctest::timeout(300)) {
  Rng rng(6);
  for (int trial = 0; trial < 12; ++trial) {
    const auto n = rng.between(2, 4);
    const auto g = random_connected_graph(rng, n, 1, 2);
    const auto r = vc_treewidth_exact(g);
    CHECK(r.value == brute_vc_width(g, n + 1));
  }
}

TEST_CASE("heuristic upper bounds") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = random_tree(rng, rng.between(2, 12));
    CHECK(vc_treewidth_upper(t.graph()).value <= 2);
  }
  for (std::size_t n = 4; n <= 12; ++n) CHECK(vc_treewidth_upper(cycle_graph(n)).value == 3);
  CHECK(vc_treewidth_upper(complete_graph(5)).value == 5);

  const auto c24 = vc_pathwidth_upper(cycle_graph(24));
  CHECK(c24.value == 2);
  CHECK(c24.certainty == Certainty::exact);
  CHECK(c24.witness.tree.is_path());

  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_connected_graph(rng, rng.between(1, 7), 1, 3);
    const auto exact = vc_treewidth_exact(g);
    const auto exact_path = vc_treewidth_exact(g, 0, true);
    const auto upper = vc_treewidth_upper(g);
    const auto path = vc_pathwidth_upper(g);
    CHECK(exact.value <= upper.value);
    CHECK(exact.value <= exact_path.value);
    CHECK(exact_path.value <= path.value);
    CHECK(vctree_valid(g, upper.witness));
    CHECK(vctree_valid(g, path.witness));
    CHECK(vc_width(g, path.witness) == path.value);
    CHECK(exact.value >= vc_lower_bound(g));
    CHECK(exact.value <= (g.vertex_count() + 1) / 2);
    if (is_biconnected(g)) CHECK(exact.value >= 2);
  }
}

TEST_CASE("eight-vertex two-tree" * doctest::timeout(120)) {
  const auto f = fixture("two-tree-8-vertex");
  const auto& g = f.decomposition.graph();
  const GraphTreeDecomposition td{f.vctree->tree, f.vctree->beta};
  CHECK(td_width(g, td) == 2);
  CHECK(vc_width(g, *f.vctree) == 3);
  CHECK(vc_treewidth_exact(g, 0, true).value == 3);
}

TEST_CASE("vertex-cut tree files") {
  const auto g = cycle_graph(5);
  const auto vct = cycle_vctree(g);
  const auto text = vctree_to_json(g, vct);
  const auto back = parse_vctree(text, g);
  CHECK(back.beta == vct.beta);
  CHECK(back.tree.graph() == vct.tree.graph());
  CHECK_THROWS_AS(parse_vctree(R"({"nodes": ["a"], "edges": [], "bags": {"a": ["nope"]}})", g), ValidationError);
  CHECK_THROWS_AS(parse_vctree(R"({"nodes": ["a", "b"], "edges": [], "bags": {}})", g), ValidationError);
}
