// Parallel kernels against their serial references on seeded random matrices.

#include <benchmark/benchmark.h>

#include "ggor/presentation.hpp"
#include "support.hpp"

using namespace ggor;
using namespace ggor::testing;

namespace {

PolyMatrix sample(std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(rows * 31 + cols);
  return random_matrix(rng, ring_of({"x", "y", "z", "t"}), rows, cols, 3, 2);
}

void BM_cofactor(benchmark::State& st) {
  auto m = sample(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(cofactor_matrix(m));
}

void BM_cofactor_serial(benchmark::State& st) {
  auto m = sample(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(cofactor_matrix_serial(m));
}

void BM_signed_minors(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto m = sample(n, n - 1);
  for (auto _ : st) benchmark::DoNotOptimize(signed_maximal_minors(m));
}

void BM_signed_minors_serial(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto m = sample(n, n - 1);
  for (auto _ : st) benchmark::DoNotOptimize(signed_maximal_minors_serial(m));
}

void BM_minors(benchmark::State& st) {
  auto m = sample(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(minors_of_size(m, 2));
}

void BM_minors_serial(benchmark::State& st) {
  auto m = sample(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(minors_of_size_serial(m, 2));
}

}  // namespace

BENCHMARK(BM_cofactor)->DenseRange(4, 6)->UseRealTime();
BENCHMARK(BM_cofactor_serial)->DenseRange(4, 6)->UseRealTime();
BENCHMARK(BM_signed_minors)->DenseRange(4, 6)->UseRealTime();
BENCHMARK(BM_signed_minors_serial)->DenseRange(4, 6)->UseRealTime();
BENCHMARK(BM_minors)->DenseRange(4, 6)->UseRealTime();
BENCHMARK(BM_minors_serial)->DenseRange(4, 6)->UseRealTime();

BENCHMARK_MAIN();
