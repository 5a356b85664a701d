#include <benchmark/benchmark.h>

#include "igcx/equivalence.hpp"

namespace {

igcx::FiniteSemigroup const& t3() {
  static auto S = igcx::builtin("full_transformation", {3});
  return S;
}

void BM_biorder_axioms(benchmark::State& state) {
  auto E = igcx::idempotent_biorder(t3());
  for (auto _ : state) {
    benchmark::DoNotOptimize(igcx::check_biorder_table(E.n, E.product).ok());
  }
}
BENCHMARK(BM_biorder_axioms);

void BM_sandwich_sets(benchmark::State& state) {
  auto E = igcx::idempotent_biorder(t3());
  for (auto _ : state) {
    int total = 0;
    for (int e = 0; e < E.n; ++e) {
      for (int f = 0; f < E.n; ++f) {
        total += static_cast<int>(igcx::sandwich_set(E, e, f).size());
      }
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_sandwich_sets);

void BM_chain_window(benchmark::State& state) {
  auto E = igcx::idempotent_biorder(igcx::builtin("rect_band", {2, 2}));
  igcx::ChainClosureOptions o;
  o.max_len = static_cast<int>(state.range(0));
  o.max_morphisms = 100000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(igcx::chain_groupoid(E, o).chains.size());
  }
}
BENCHMARK(BM_chain_window)->Arg(4)->Arg(8)->Arg(12);

void BM_trace_groupoid(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(igcx::trace_groupoid(t3()).g.size());
  }
}
BENCHMARK(BM_trace_groupoid);

void BM_left_category(benchmark::State& state) {
  auto G = igcx::trace_groupoid(t3());
  for (auto _ : state) {
    benchmark::DoNotOptimize(igcx::left_category(G).cat.size());
  }
}
BENCHMARK(BM_left_category);

void BM_cross_connection(benchmark::State& state) {
  auto G = igcx::trace_groupoid(t3());
  for (auto _ : state) {
    benchmark::DoNotOptimize(igcx::cross_connection_of(G).x.e_gamma.size());
  }
}
BENCHMARK(BM_cross_connection);

void BM_roundtrip(benchmark::State& state) {
  auto S = state.range(0) == 2 ? igcx::builtin("full_transformation", {2})
                               : t3();
  for (auto _ : state) {
    benchmark::DoNotOptimize(igcx::roundtrip_semigroup(S).pass());
  }
}
BENCHMARK(BM_roundtrip)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
