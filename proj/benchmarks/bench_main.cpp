#include <benchmark/benchmark.h>

#include "qpascal/closed_form.hpp"
#include "qpascal/numtheory.hpp"
#include "qpascal/render.hpp"
#include "qpascal/sequences.hpp"
#include "qpascal/walk.hpp"

namespace {

using namespace qpascal;

void BM_Evolve(benchmark::State& state) {
  const auto t = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve({1, 1}, t));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Evolve)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_LucasSweep(benchmark::State& state) {
  const auto max_n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::uint64_t acc = 0;
    for (std::uint64_t n = 0; n <= max_n; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) acc += binom_mod_lucas(n, k, 3);
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (max_n + 1) * (max_n + 2) / 2);
}
BENCHMARK(BM_LucasSweep)->Arg(256)->Arg(1024);

void BM_KummerValuations(benchmark::State& state) {
  const auto max_n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::size_t acc = 0;
    for (std::uint64_t n = 0; n <= max_n; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) acc += nu_p_binom(n, k, 3);
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (max_n + 1) * (max_n + 2) / 2);
}
BENCHMARK(BM_KummerValuations)->Arg(256)->Arg(1024);

void BM_FmExact(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f_m(1, n, n));
  }
}
BENCHMARK(BM_FmExact)->Arg(128)->Arg(512)->Arg(2048);

void BM_CarpetDigitwise(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(carpet_image({1, 1}, size, 3));
  }
  state.SetItemsProcessed(state.iterations() * size * size);
}
BENCHMARK(BM_CarpetDigitwise)->Arg(243)->Arg(729);

void BM_PascalModImage(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pascal_mod_image(rows, 6));
  }
  state.SetItemsProcessed(state.iterations() * rows * (rows + 1) / 2);
}
BENCHMARK(BM_PascalModImage)->Arg(180)->Arg(1024);

void BM_ValuationImage(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pascal_valuation_image(rows, 3, 3));
  }
}
BENCHMARK(BM_ValuationImage)->Arg(243)->Arg(729);

void BM_DiagonalSums(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hadamard_diagonals(DiagonalDirection::AUp, TriangleColor::Blue, n));
  }
}
BENCHMARK(BM_DiagonalSums)->Arg(100)->Arg(300);

}  // namespace

BENCHMARK_MAIN();
