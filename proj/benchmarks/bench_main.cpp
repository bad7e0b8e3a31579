#include <benchmark/benchmark.h>

#include <random>

#include "graphreal/bound_engine.hpp"
#include "graphreal/cut_bounds.hpp"
#include "graphreal/fixtures.hpp"
#include "graphreal/matrix.hpp"
#include "graphreal/minimal.hpp"
#include "graphreal/vc_search.hpp"

using namespace graphreal;

namespace {

Matrix random_matrix(std::uint32_t q, std::size_t rows, std::size_t cols) {
  std::mt19937_64 eng(rows * 131 + cols);
  Matrix m(Field(q), rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<Element>(eng() % q);
  }
  return m;
}

void BM_RowReduce(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const Matrix m = random_matrix(q, n / 2, n);
  for (auto _ : state) {
    Matrix copy = m;
    benchmark::DoNotOptimize(row_reduce(copy));
  }
}
BENCHMARK(BM_RowReduce)->Args({2, 24})->Args({2, 64})->Args({3, 64})->Args({7, 128});

void BM_KappaPathExact(benchmark::State& state) {
  const auto f = fixture("cycle-11-3-3");
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> keep(f.code.index_set().begin(), f.code.index_set().begin() + static_cast<long>(n));
  const auto code = project(f.code, keep);
  for (auto _ : state) benchmark::DoNotOptimize(kappa_path_exact(code, std::uint64_t{1} << 30).kappa);
}
BENCHMARK(BM_KappaPathExact)->DenseRange(7, 10)->Unit(benchmark::kMillisecond);

void BM_VcTreewidthExact(benchmark::State& state) {
  const auto g = cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vc_treewidth_exact(g).value);
}
BENCHMARK(BM_VcTreewidthExact)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_VcTwoTree(benchmark::State& state) {
  const auto f = fixture("two-tree-8-vertex");
  const bool paths = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(vc_treewidth_exact(f.decomposition.graph(), 0, paths).value);
}
BENCHMARK(BM_VcTwoTree)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TheoremBoundGolay(benchmark::State& state) {
  const auto f = fixture("golay-24-12-8");
  for (auto _ : state) benchmark::DoNotOptimize(theorem_bound(f.code, f.decomposition, *f.vctree).bound);
}
BENCHMARK(BM_TheoremBoundGolay)->Unit(benchmark::kMillisecond);

void BM_LpCycle11(benchmark::State& state) {
  const auto f = fixture("cycle-11-3-3");
  const auto cuts = default_cuts(f.decomposition.graph(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lp_kappa_plus_lower_bound(f.code, f.decomposition, cuts).value);
}
BENCHMARK(BM_LpCycle11)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
