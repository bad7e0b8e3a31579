#include "doctest.h"
#include "graphreal/code.hpp"
#include "graphreal/fixtures.hpp"
#include "helpers.hpp"

using namespace graphreal;
using namespace graphreal::testing;

namespace {

LinearCode c11_code() { return fixture("cycle-11-3-3").code; }
LinearCode repetition3() { return binary({"111"}); }

}  // namespace

TEST_CASE("prime field arithmetic matches integer arithmetic mod q") {
  for (std::uint32_t q : {2U, 3U, 5U, 7U, 11U}) {
    const Field f(q);
    for (Element a = 0; a < q; ++a) {
      for (Element b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == (a + b) % q);
        CHECK(f.sub(a, b) == (a + q - b) % q);
        CHECK(f.mul(a, b) == (a * b) % q);
      }
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
  CHECK_THROWS_AS(Field(4), ValidationError);
  CHECK_THROWS_AS(Field(1), ValidationError);
}

TEST_CASE("row reduction picks the lowest pivot columns") {
  auto m = Matrix::from_rows(Field(2), 4, {{0, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}});
  const auto piv = row_reduce(m);
  CHECK(piv == std::vector<std::size_t>{0, 1});
  CHECK(m.to_rows() == std::vector<std::vector<std::uint64_t>>{{1, 0, 1, 0}, {0, 1, 1, 0}});
}

TEST_CASE("nullspace is orthogonal and has complementary dimension") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t q = trial % 2 ? 3 : 2;
    const auto n = rng.between(1, 8);
    const auto c = random_code(rng, q, n, 5);
    const auto h = c.parity_check();
    CHECK(h.rows() == n - c.dim());
    const auto prod = multiply(c.generators(), h.transpose());
    for (std::size_t r = 0; r < prod.rows(); ++r) {
      for (std::size_t s = 0; s < prod.cols(); ++s) CHECK(prod(r, s) == 0);
    }
  }
}

TEST_CASE("canonicalize") {
  CHECK(binary({"110", "011", "101"}).dim() == 2);
  CHECK(LinearCode::canonicalize(Matrix::from_rows(Field(2), 3, {{0, 0, 0}}), numeric_labels(3)).dim() == 0);
  CHECK(c11_code().dim() == 3);
  // Same row space, different generators, equal codes.
  CHECK(binary({"110", "011"}) == binary({"101", "011"}));
  CHECK_THROWS_AS(LinearCode::canonicalize(Matrix::from_rows(Field(2), 2, {{1, 0}}), {"a", "a"}), ValidationError);
  CHECK_THROWS_AS(LinearCode::canonicalize(Matrix::from_rows(Field(2), 2, {{1, 0}}), {"a"}), ValidationError);
}

TEST_CASE("projection") {
  const auto c = c11_code();
  const std::vector<std::string> j{"3", "4", "5"};
  const auto p = project(c, j);
  CHECK(p.dim() == 2);
  CHECK(word_set(p) == std::set<Word>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(project(c, c.index_set()) == c);
  const auto r = project(repetition3(), std::vector<std::string>{"1"});
  CHECK(r.dim() == 1);
  CHECK(word_set(r) == std::set<Word>{{0}, {1}});
}

TEST_CASE("cross-section") {
  const auto c = c11_code();
  const auto cs = cross_section(c, std::vector<std::string>{"4", "5", "6", "7", "8"});
  CHECK(cs.dim() == 2);
  CHECK(word_set(cs).count(Word{1, 1, 1, 0, 0}) == 1);
  CHECK(word_set(cs).count(Word{0, 0, 1, 1, 1}) == 1);
  CHECK(cross_section(c, std::vector<std::string>{}).dim() == 0);
  CHECK(cross_section(c, std::vector<std::string>{"1", "2"}).dim() == 0);
}

TEST_CASE("direct sum") {
  const std::vector<LinearCode> two{repetition3(), repetition3().relabeled({"4", "5", "6"})};
  const auto s = direct_sum(two);
  CHECK(s.length() == 6);
  CHECK(s.dim() == 2);
  CHECK(word_set(s) == std::set<Word>{{0, 0, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}, {1, 1, 1, 1, 1, 1}});
  const std::vector<LinearCode> one{c11_code()};
  CHECK(direct_sum(one) == c11_code());
  const std::vector<LinearCode> with_zero{LinearCode::zero(Field(2), {"z"}), repetition3()};
  const auto z = direct_sum(with_zero);
  CHECK(z.length() == 4);
  CHECK(z.dim() == 1);
  const std::vector<LinearCode> clash{repetition3(), repetition3()};
  CHECK_THROWS_AS(direct_sum(clash), ValidationError);
}

TEST_CASE("minimum distance") {
  CHECK(minimum_distance(c11_code()) == 3);
  CHECK(oracle_min_distance(c11_code()) == 3);
  CHECK(minimum_distance(repetition3()) == 3);
  const auto golay = fixture("golay-24-12-8").code;
  CHECK(golay.dim() == 12);
  CHECK(minimum_distance(golay) == 8);
  CHECK(oracle_min_distance(golay) == 8);
  CHECK_THROWS_AS(minimum_distance(golay, 1U << 10), GuardExceeded);
}

TEST_CASE("projection and cross-section agree with codeword enumeration") {
  Rng rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::uint32_t q = (trial % 3 == 0) ? 3 : (trial % 3 == 1 ? 2 : 5);
    const auto n = rng.between(1, 7);
    const auto c = random_code(rng, q, n, q == 5 ? 3 : 5);
    std::vector<std::size_t> j;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i) (rng.chance(1, 2) ? j : rest).push_back(i);
    CHECK(oracle_projection_dim(c, j) == graphreal::projection_dim(c, j));
    CHECK(oracle_cross_section_dim(c, j) == graphreal::cross_section_dim(c, j));
    CHECK(graphreal::cross_section_dim(c, j) == c.dim() - graphreal::projection_dim(c, rest));

    std::set<Word> restricted;
    for (const auto& w : codewords(c)) restricted.insert(restrict(w, j));
    CHECK(word_set(project_positions(c, j)) == restricted);
    for (const auto& w : codewords(c)) CHECK(c.contains(w));

    const CrossSectionTable table(c);
    CoordinateMask mask = 0;
    for (auto p : j) mask |= CoordinateMask{1} << p;
    CHECK(table(mask) == oracle_cross_section_dim(c, j));
  }
}

TEST_CASE("enumeration guards") {
  CHECK(checked_power(3, 4) == 81);
  CHECK_THROWS_AS(checked_power(2, 30, 1U << 20), GuardExceeded);
  std::size_t seen = 0;
  for_each_codeword(c11_code(), 8, [&](std::span<const Element>) { ++seen; });
  CHECK(seen == 8);
  CHECK_THROWS_AS(for_each_codeword(c11_code(), 7, [](std::span<const Element>) {}), GuardExceeded);
}
