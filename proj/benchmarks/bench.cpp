#include <benchmark/benchmark.h>

#include <cstdint>

#include "lefschetz/hilbert.hpp"
#include "lefschetz/macaulay.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/rng.hpp"
#include "lefschetz/wlp.hpp"

using namespace lefschetz;

namespace {

Matrix<std::uint64_t> random_square(const PrimeField& field, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Matrix<std::uint64_t> m(n, n);
  for (auto& v : m.data) v = rng.below(field.modulus());
  return m;
}

}  // namespace

static void bm_dense_rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PrimeField field(kMersenne61);
  const auto src = random_square(field, n, 7);
  for (auto _ : state) {
    auto m = src;
    benchmark::DoNotOptimize(rank_in_place(field, m));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_dense_rank)->Arg(64)->Arg(128)->Arg(256)->Arg(512)->Complexity();

static void bm_dense_rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PrimeField field(kMersenne61);
  const auto src = random_square(field, n, 7);
  for (auto _ : state) {
    auto m = src;
    benchmark::DoNotOptimize(rref_in_place(field, m));
  }
}
BENCHMARK(bm_dense_rref)->Arg(64)->Arg(128)->Arg(256);

// Full Hilbert scan of a random equigenerated CI: n+1 forms of degree d in
// n+1 variables, eliminated degree by degree through the socle.
static void bm_hilbert_scan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  PrimeField field(kMersenne61);
  const auto spec = random_equigenerated_ci(field, n, d, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_by_linear_algebra(field, spec));
  }
}
BENCHMARK(bm_hilbert_scan)->Args({3, 3})->Args({3, 4})->Args({3, 5})->Args({4, 3})->Args({4, 4});

// One middle-degree multiplication map: tower advance, matrix assembly, rank.
static void bm_middle_map(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  PrimeField field(kMersenne61);
  const auto spec = random_equigenerated_ci(field, n, d, 11);
  const int t = shortcut_degrees(ci_socle_degree(spec.degrees)).front();
  WlpOptions opts;
  opts.seed = 13;
  opts.trials = 1;
  opts.drop_used_tails = false;
  for (auto _ : state) {
    FpQuotient q(field, spec);
    benchmark::DoNotOptimize(wlp_in_degree(q, t, opts));
  }
}
BENCHMARK(bm_middle_map)->Args({3, 3})->Args({3, 4})->Args({4, 3})->Args({4, 4});

BENCHMARK_MAIN();
