// Serial reference kernels against the OpenMP ones on the matrices the
// fat-points module actually builds.
#include <benchmark/benchmark.h>

#include <random>

#include "spreadlab/fatpoints.hpp"
#include "spreadlab/linalg.hpp"

using namespace spreadlab;

namespace {

Backend backend_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Backend::Serial : Backend::Parallel;
}

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  FieldSampler sampler(seed, kDefaultPrime);
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = sampler.next();
  }
  return m;
}

void BM_Rref(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(1));
  DenseMatrix m = random_matrix(n, n + n / 2, 1);
  PrimeField field;
  for (auto _ : state) benchmark::DoNotOptimize(rref(m, field, backend_of(state)).rank());
}

// 16 points of multiplicity 4: 160 conditions.
void BM_H0(benchmark::State& state) {
  auto scheme = sample_scheme(16, {4}, Constraint::None, 42);
  int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(h0(scheme, d, backend_of(state)).h0());
}

void BM_InsertAll(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(1));
  DenseMatrix m = random_matrix(n, n, 2);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(m.row_vec(i));
  for (auto _ : state) {
    Subspace space(n, PrimeField());
    benchmark::DoNotOptimize(space.insert_all(rows, backend_of(state)));
  }
}

}  // namespace

BENCHMARK(BM_Rref)->ArgsProduct({{0, 1}, {64, 256}})->ArgNames({"parallel", "n"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_H0)->ArgsProduct({{0, 1}, {16, 24}})->ArgNames({"parallel", "d"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InsertAll)->ArgsProduct({{0, 1}, {64, 256}})->ArgNames({"parallel", "n"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
