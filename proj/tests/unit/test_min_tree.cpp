#include "doctest.h"
#include "graphreal/builders.hpp"
#include "graphreal/enumerate.hpp"
#include "graphreal/fixtures.hpp"
#include "graphreal/minimal.hpp"
#include "helpers.hpp"

using namespace graphreal;
using namespace graphreal::testing;

namespace {

Fixture cycle11() { return fixture("cycle-11-3-3"); }

CodeTreeDecomposition three_path(const LinearCode& code) {
  return CodeTreeDecomposition(GraphDecomposition(path_graph({"a", "b", "c"}), code.index_set(), {0, 1, 2}));
}

std::size_t max_of(const std::vector<std::size_t>& v) { return v.empty() ? 0 : *std::max_element(v.begin(), v.end()); }

}  // namespace

TEST_CASE("state dimensions") {
  const auto rep = binary({"111"});
  const auto td = three_path(rep);
  CHECK(dim_state(rep, td, 0) == 1);
  CHECK(dim_state(rep, td, 1) == 1);

  const auto f = cycle11();
  const auto path = path_decomposition(f.code, f.ordering);
  const auto& t = path.tree().graph();
  CHECK(dim_state(f.code, path, *t.edge_between(t.id("p4"), t.id("p5"))) == 2);

  // A leaf carrying no coordinates.
  const GraphDecomposition d(path_graph({"a", "b"}), rep.index_set(), {0, 0, 0});
  CHECK(dim_state(rep, CodeTreeDecomposition(d), 0) == 0);
}

TEST_CASE("constraint dimensions") {
  const auto f = cycle11();
  const auto path = path_decomposition(f.code, f.ordering);
  const auto& t = path.tree().graph();
  CHECK(dim_constraint(f.code, path, t.id("p5")) == 3);
  CHECK(dim_constraint(f.code, path, t.id("p0")) == 0);
  const auto rep = binary({"111"});
  CHECK(dim_constraint(rep, three_path(rep), 1) == 1);
}

TEST_CASE("minimal realizations of the fixtures") {
  const auto f = cycle11();
  const auto m = build_minimal(f.code, path_decomposition(f.code, f.ordering));
  const auto r = measure(m);
  CHECK(r.kappa == 3);
  CHECK(r.sigma == 2);
  CHECK(verify_realization(m, f.code).ok);
  CHECK(kappa_of_tree_decomp(f.code, path_decomposition(f.code, f.ordering)) == 3);

  const auto golay = fixture("golay-24-12-8");
  const auto gp = path_decomposition(golay.code, golay.ordering);
  CHECK(kappa_of_tree_decomp(golay.code, gp) == 9);
  CHECK(measure(build_minimal(golay.code, gp)).kappa == 9);
  CHECK(kappa_of_ordering(CrossSectionTable(golay.code), golay.ordering) == 9);
}

TEST_CASE("zero code and single-vertex trees") {
  Rng rng(3);
  const auto zero = LinearCode::zero(Field(2), numeric_labels(5));
  const auto t = random_tree(rng, 4);
  const auto d = random_decomposition(rng, zero, t.graph());
  const auto r = measure(build_minimal(zero, CodeTreeDecomposition(d)));
  CHECK(r.kappa == 0);
  CHECK(r.sigma == 0);

  const auto f = cycle11();
  const GraphDecomposition single(Graph({"hub"}, std::vector<Edge>{}), f.code.index_set(),
                                  std::vector<VertexId>(11, 0));
  CHECK(kappa_of_tree_decomp(f.code, CodeTreeDecomposition(single)) == 3);
}

TEST_CASE("exhaustive searches on small codes") {
  const auto rep = binary({"111"});
  CHECK(kappa_tree_exact(rep).kappa == 1);
  CHECK(kappa_path_exact(rep).kappa == 1);
  const auto even = binary({"110", "011"});
  CHECK(kappa_path_exact(even).kappa == 2);
  CHECK(kappa_tree_exact(even).kappa == 2);
  const auto zero = LinearCode::zero(Field(2), numeric_labels(4));
  CHECK(kappa_tree_exact(zero).kappa == 0);
  CHECK(kappa_path_exact(zero).kappa == 0);
  const auto res = kappa_path_exact(cycle11().code, 1U << 26);
  CHECK(res.kappa <= 3);
  CHECK(kappa_of_tree_decomp(cycle11().code, res.witness) == res.kappa);
  CHECK_THROWS_AS(kappa_tree_exact(cycle11().code), GuardExceeded);
}

TEST_CASE("tree complexity of the [11,3,3] code" * doctest::timeout(120)) {
  const auto f = cycle11();
  const auto res = kappa_tree_exact(f.code, 1U << 26);
  CHECK(res.kappa <= 3);
  CHECK(res.kappa == 3);
  CHECK(kappa_of_tree_decomp(f.code, res.witness) == res.kappa);
}

TEST_CASE("realized dimensions match the formulas and the coset oracle") {
  Rng rng(404);
  for (int trial = 0; trial < 80; ++trial) {
    const std::uint32_t q = trial % 2 ? 3 : 2;
    const auto code = random_code(rng, q, rng.between(1, 7), 4);
    const auto t = random_tree(rng, rng.between(1, 6));
    const CodeTreeDecomposition td(random_decomposition(rng, code, t.graph()));
    const auto model = build_minimal(code, td);
    const auto formula = minimal_dims(code, td);
    const auto oracle = minimal_dims_by_cosets(code, td);
    const auto r = measure(model);
    CHECK(r.state_dims == formula.state);
    CHECK(r.constraint_dims == formula.constraint);
    CHECK(formula.state == oracle.state);
    CHECK(formula.constraint == oracle.constraint);
    CHECK(r.kappa_plus == code.dim() + r.sigma_plus);
    CHECK(verify_realization(model, code, 200).ok);
  }
}

TEST_CASE("minimal realization is dimension-wise below other tree realizations") {
  Rng rng(505);
  for (int trial = 0; trial < 60; ++trial) {
    const Field field(trial % 2 ? 3 : 2);
    const auto t = random_tree(rng, rng.between(2, 5));
    const auto code0 = random_code(rng, field.order(), rng.between(1, 5), 3);
    const auto d = random_decomposition(rng, code0, t.graph());
    // Broadcast realization of code0, and an essential random model realizing some code.
    std::vector<std::pair<GraphicalModel, LinearCode>> others;
    others.emplace_back(build_broadcast(code0, d), code0);
    const auto random = essentialize(random_model(rng, d, field, 2));
    others.emplace_back(random, project(full_behavior(random), d.index_set()));
    for (const auto& [model, code] : others) {
      const auto minimal = measure(build_minimal(code, CodeTreeDecomposition(d)));
      const auto other = measure(model);
      for (std::size_t e = 0; e < minimal.state_dims.size(); ++e) CHECK(minimal.state_dims[e] <= other.state_dims[e]);
      for (std::size_t v = 0; v < minimal.constraint_dims.size(); ++v) {
        CHECK(minimal.constraint_dims[v] <= other.constraint_dims[v]);
      }
    }
  }
}

TEST_CASE("exhaustive searches agree with brute force and with each other") {
  Rng rng(606);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t q = trial % 3 == 0 ? 3 : 2;
    const auto n = rng.between(3, 6);
    const auto code = random_code(rng, q, n, 4);
    const auto tree = kappa_tree_exact(code);
    const auto path = kappa_path_exact(code);
    CHECK(path.kappa >= tree.kappa);

    // Every ordering, dimensions from the coset oracle.
    std::size_t best = SIZE_MAX;
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    do {
      best = std::min(best, max_of(minimal_dims_by_cosets(code, path_decomposition(code, order)).constraint));
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(path.kappa == best);

    // Cubic trees suffice: no random tree decomposition beats the search.
    for (int k = 0; k < 5; ++k) {
      const auto t = random_tree(rng, rng.between(1, 7));
      const CodeTreeDecomposition td(random_decomposition(rng, code, t.graph()));
      CHECK(kappa_of_tree_decomp(code, td) >= tree.kappa);
    }

    const auto d = oracle_min_distance(code);
    if (code.dim() > 0) {
      const auto k = code.dim();
      CHECK(path.kappa * n >= k * (d - 1));
    }
  }
}

TEST_CASE("tree decomposition validation") {
  const auto code = binary({"111"});
  CHECK_THROWS_AS(CodeTreeDecomposition(GraphDecomposition(cycle_graph(3), code.index_set(), {0, 1, 2})),
                  ValidationError);
  const std::vector<std::size_t> bad{0, 0, 1};
  CHECK_THROWS_AS(path_decomposition(code, bad), ValidationError);
}
