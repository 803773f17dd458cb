#include <benchmark/benchmark.h>

#include "quasif/classify.hpp"
#include "quasif/construct.hpp"
#include "quasif/hilbert.hpp"
#include "quasif/shadows.hpp"
#include "quasif/simplicial_complex.hpp"

using namespace quasif;

namespace {

Ideal make(int n, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (const char* g : gens) ms.push_back(parse_monomial(g, n));
  return minimalize(std::move(ms), n);
}

const Ideal& seventeen_gen_ideal() {
  static const Ideal ideal = make(
      7, {"x1x2x6", "x1x2x7", "x1x3x4", "x1x3x5", "x1x3x6", "x1x3x7", "x1x4x5", "x1x4x6",
          "x1x5x7", "x1x6x7", "x2x4x5", "x2x4x7", "x2x6x7", "x3x4x6", "x3x5x7", "x2x5x6",
          "x5x6x7"});
  return ideal;
}

void BM_StanleyReisnerComplex(benchmark::State& state) {
  const Ideal& ideal = seventeen_gen_ideal();
  for (auto _ : state) {
    benchmark::DoNotOptimize(stanley_reisner_complex(ideal));
  }
}
BENCHMARK(BM_StanleyReisnerComplex);

void BM_QuasiType(benchmark::State& state) {
  const Ideal& ideal = seventeen_gen_ideal();
  for (auto _ : state) {
    benchmark::DoNotOptimize(quasi_type(ideal));
  }
}
BENCHMARK(BM_QuasiType);

void BM_FVectorDenseComplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SimplicialComplex complex(n, sm_universe(n, n - 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f_vector(complex));
  }
}
BENCHMARK(BM_FVectorDenseComplex)->Arg(10)->Arg(14)->Arg(18);

void BM_MinimalPrimesConstructed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto [lo, hi] = type_bounds(n);
  const Ideal ideal = construct_of_type(n, lo).ideal;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_primes(ideal));
  }
}
BENCHMARK(BM_MinimalPrimesConstructed)->Arg(8)->Arg(10)->Arg(12);

void BM_PerfectNumberBruteforce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(perfect_number_bruteforce(n, 2));
  }
}
BENCHMARK(BM_PerfectNumberBruteforce)->Arg(6)->Arg(7);

void BM_EnumerateCensus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const long long b = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_quasi(n, b, false));
  }
}
BENCHMARK(BM_EnumerateCensus)->Args({4, 0})->Args({5, 0})->Args({5, -4});

void BM_EnumerateModSymmetry(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_quasi(5, 0, true));
  }
}
BENCHMARK(BM_EnumerateModSymmetry);

void BM_CountStandardMonomials(benchmark::State& state) {
  const Ideal& ideal = seventeen_gen_ideal();
  const long long m = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_standard_monomials(ideal, m));
  }
}
BENCHMARK(BM_CountStandardMonomials)->Arg(4)->Arg(8);

void BM_ConstructOfType(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto [lo, hi] = type_bounds(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_of_type(n, lo));
  }
}
BENCHMARK(BM_ConstructOfType)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
