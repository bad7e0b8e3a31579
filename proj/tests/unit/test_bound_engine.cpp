#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "graphreal/bound_engine.hpp"
#include "graphreal/builders.hpp"
#include "graphreal/fixtures.hpp"
#include "graphreal/nkd.hpp"
#include "helpers.hpp"

using namespace graphreal;
using namespace graphreal::testing;

namespace {

// m(z) recomputed with codeword enumeration and branch unions taken directly.
std::vector<std::size_t> oracle_m(const LinearCode& code, const GraphDecomposition& d, const VertexCutTree& vct) {
  std::vector<std::size_t> out;
  for (VertexId z = 0; z < vct.tree.size(); ++z) {
    std::size_t sum = 0;
    for (const auto& branch : vct.tree.branches(z)) {
      VertexSet part;
      for (auto x : branch.to_vector()) part |= vct.beta[x];
      part = part - vct.beta[z];
      sum += oracle_cross_section_dim(code, d.preimage(part));
    }
    out.push_back(code.dim() - sum);
  }
  return out;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

TEST_CASE("mu on the cycle fixture") {
  const auto f = fixture("cycle-11-3-3");
  const auto r = mu(f.code, f.decomposition, *f.vctree);
  CHECK(r.m == std::vector<std::size_t>{0, 1, 2, 2, 3, 2, 2, 1, 0, 0});
  CHECK(r.mu == 3);
  CHECK(f.vctree->tree.graph().label(r.argmax) == "z5");
  CHECK(r.m == oracle_m(f.code, f.decomposition, *f.vctree));
}

TEST_CASE("mu of special vertex-cut trees") {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto code = random_code(rng, trial % 2 ? 3 : 2, rng.between(1, 7), 4);
    const auto g = random_connected_graph(rng, rng.between(1, 6), 1, 3);
    const auto d = random_decomposition(rng, code, g);
    const auto single = mu(code, d, trivial_vctree(g));
    CHECK(single.mu == code.dim());

    const auto t = random_tree(rng, rng.between(1, 6));
    const CodeTreeDecomposition td(random_decomposition(rng, code, t.graph()));
    std::vector<VertexSet> beta;
    for (VertexId v = 0; v < t.size(); ++v) beta.push_back(VertexSet::single(v));
    const auto id = mu(code, td.decomposition(), VertexCutTree{t, beta});
    for (VertexId v = 0; v < t.size(); ++v) CHECK(id.m[v] == dim_constraint(code, td, v));
  }
}

TEST_CASE("alpha maps") {
  const auto g = cycle_graph(7);
  const auto triv = trivial_vctree(g);
  const auto a0 = build_alpha(g, triv, 0);
  CHECK(a0.alpha[0] == g.all());

  const auto vct = cycle_vctree(g);
  const auto& t = vct.tree.graph();
  const auto a = build_alpha(g, vct, t.id("z5"));
  for (std::size_t i = 1; i < 7; ++i) {
    const auto z = t.id("z" + std::to_string(i));
    CHECK(a.alpha[z] == (i == 5 ? VertexSet::of({0, 5}) : VertexSet::single(i)));
  }
  CHECK_THROWS_AS(build_alpha(g, vct, 99), ValidationError);

  Rng rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const auto gen = random_tree_decomposition(rng, 8);
    const VertexCutTree v{gen.td.tree, gen.td.beta};
    const auto root = static_cast<VertexId>(rng.below(v.tree.size()));
    const auto al = build_alpha(gen.graph, v, root);
    VertexSet seen;
    for (VertexId z = 0; z < v.tree.size(); ++z) {
      CHECK_FALSE(al.alpha[z].intersects(seen));
      CHECK((al.alpha[z] - v.beta[z]).empty());
      seen |= al.alpha[z];
    }
    CHECK(seen == gen.graph.all());
    CHECK(al.alpha[root] == v.beta[root]);
  }
}

TEST_CASE("gamma maps") {
  const auto f = fixture("two-tree-8-vertex");
  REQUIRE(f.vctree);
  REQUIRE(f.alpha_root);
  const auto& t = f.vctree->tree.graph();
  const auto alpha = build_alpha(f.decomposition.graph(), *f.vctree, t.id(*f.alpha_root));
  const auto gamma = build_gamma(f.code, f.decomposition, *f.vctree, alpha);
  REQUIRE(f.expected_gamma.size() == f.code.length());
  for (std::size_t i = 0; i < f.code.length(); ++i) {
    CHECK(t.label(gamma.decomposition().omega(i)) == f.expected_gamma[i]);
  }

  const auto a = fixture("cycle-11-3-3");
  const auto& g = a.decomposition.graph();
  const auto triv = trivial_vctree(g);
  const auto one = build_gamma(a.code, a.decomposition, triv, build_alpha(g, triv, 0));
  for (std::size_t i = 0; i < a.code.length(); ++i) CHECK(one.decomposition().omega(i) == 0);
}

TEST_CASE("theorem bound") {
  const auto a = fixture("cycle-11-3-3");
  const auto c = theorem_bound(a.code, a.decomposition, *a.vctree);
  CHECK(c.mu.mu == 3);
  CHECK(c.kappa_gamma == 3);
  CHECK(c.vc_width == 2);
  CHECK(c.bound == 2);

  const auto golay = fixture("golay-24-12-8");
  CHECK(theorem_bound(golay.code, golay.decomposition, *golay.vctree).bound >= 5);

  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto code = random_code(rng, 2, rng.between(1, 7), 4);
    const auto g = random_connected_graph(rng, rng.between(1, 5), 1, 3);
    const auto d = random_decomposition(rng, code, g);
    CHECK(theorem_bound(code, d, trivial_vctree(g)).bound == ceil_div(code.dim(), g.vertex_count()));
  }
}

TEST_CASE("pointwise bound and soundness on random inputs") {
  Rng rng(24);
  for (int trial = 0; trial < 80; ++trial) {
    const std::uint32_t q = trial % 3 == 0 ? 3 : 2;
    const auto gen = random_tree_decomposition(rng, 6);
    const auto code = random_code(rng, q, rng.between(1, 7), 4);
    const auto d = random_decomposition(rng, code, gen.graph);
    const VertexCutTree vct{gen.td.tree, gen.td.beta};
    const auto cert = theorem_bound(code, d, vct);

    for (VertexId z = 0; z < vct.tree.size(); ++z) {
      CHECK(dim_constraint(code, cert.gamma, z) <= cert.mu.m[z]);
    }
    CHECK(cert.mu.m == oracle_m(code, d, vct));

    const std::vector<GraphicalModel> models{build_broadcast(code, d), extend_via_spanning_tree(code, d)};
    for (const auto& m : models) {
      if (m.variable_count() > 64) continue;
      REQUIRE(verify_realization(m, code).ok);
      CHECK(measure(m).kappa >= cert.bound);
    }
  }
}

TEST_CASE("corollary bounds") {
  const auto golay = fixture("golay-24-12-8");
  CorollaryInputs in;
  in.kappa_path_code = SourcedValue{9, true, "given"};
  const auto r = corollary_bounds(golay.code, golay.decomposition.graph(), in);
  REQUIRE(r.path_bound);
  CHECK(*r.path_bound >= 5);
  CHECK(r.best() >= 5);

  Rng rng(25);
  for (int trial = 0; trial < 15; ++trial) {
    const auto code = random_code(rng, 2, rng.between(3, 6), 3);
    const auto t = random_tree(rng, rng.between(1, 6));
    const auto d = random_decomposition(rng, code, t.graph());
    const auto cr = corollary_bounds(code, t.graph(), {});
    REQUIRE(cr.tree_bound);
    CHECK(*cr.tree_bound == kappa_tree_exact(code).kappa);
    CHECK(cr.best() <= measure(build_minimal(code, CodeTreeDecomposition(d))).kappa);
  }

  const auto a = fixture("cycle-11-3-3");
  CorollaryInputs none_code;
  none_code.kappa_tree_code = std::nullopt;
  Guards tight;
  tight.enumeration_bits = 4;
  CHECK_THROWS_AS(corollary_bounds(a.code, a.decomposition.graph(), none_code, tight), ValidationError);
}

TEST_CASE("n-k-d treewidth bound") {
  const auto g = nkd_treewidth_bound(24, 12, 8);
  CHECK(g.lower <= g.upper);
  CHECK(g.lower > Rational(29, 100));
  CHECK(g.upper < Rational(291, 1000));
  CHECK(g.kappa_tree_lower == 1);
  CHECK(g.kappa_path_lower == 4);
  CHECK(g.path_value == Rational(7, 2));

  CHECK(nkd_treewidth_bound(10, 5, 1).lower == 0);
  CHECK(nkd_treewidth_bound(10, 5, 1).kappa_tree_lower == 0);

  const auto rep = nkd_treewidth_bound(3, 1, 3);
  CHECK(rep.log2_n_minus_1.exact);
  CHECK(rep.lower == Rational(2, 15));
  CHECK(rep.upper == Rational(2, 15));
  CHECK(rep.kappa_tree_lower == 1);

  CHECK_THROWS_AS(nkd_treewidth_bound(1, 1, 1), ValidationError);
  CHECK_THROWS_AS(nkd_treewidth_bound(5, 6, 1), ValidationError);
  CHECK_THROWS_AS(nkd_treewidth_bound(5, 2, 6), ValidationError);
}

TEST_CASE("log brackets") {
  // 2^a <= m^(2^p) < 2^(a+1), checked on small numbers without big integers.
  for (std::uint64_t m : {2ULL, 3ULL, 5ULL, 7ULL, 22ULL, 23ULL, 1000ULL}) {
    for (unsigned p : {1U, 2U, 3U}) {
      const auto b = log2_bracket(m, p);
      CHECK(b.upper - b.lower == (b.exact ? Rational(0) : Rational(1, 1U << p)));
      const double e = std::log2(static_cast<double>(m));
      CHECK(b.lower.get_d() <= e + 1e-12);
      CHECK(b.upper.get_d() >= e - 1e-12);
      CHECK(b.exact == ((m & (m - 1)) == 0));
    }
  }
  const auto one = log2_bracket(1, 5);
  CHECK(one.exact);
  CHECK(one.lower == 0);
}
