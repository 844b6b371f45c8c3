#include <benchmark/benchmark.h>

#include "dgcell/expression.hpp"
#include "dgcell/hochschild.hpp"
#include "dgcell/homology.hpp"
#include "dgcell/ideal_lab.hpp"

using namespace dgcell;

namespace {

struct Weyl {
  SignaturePtr sig = make_signature({{"x1", 1, 0, 1}, {"x2", 2, 0, 1}, {"x3", 3, -1, 2}});
  Polynomial delta = parse_expression("x1*x2 - x2*x1 - 1", sig);
  FiniteCellDGA A = build_dga(sig, {{2, delta}});
  GeneratorPair pair = make_generator_pair(A, parse_expression("x3", sig), delta);
  BasisFamily V = BasisFamily::normal_words(1, 0);
};

const Weyl& weyl() {
  static const Weyl w;
  return w;
}

void BM_TipSet(benchmark::State& state) {
  const auto& w = weyl();
  auto slice = ideal_slice(w.A, w.pair, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tip_set(OrderKind::RightLex, slice.basis));
  state.counters["dim"] = static_cast<double>(slice.dim());
}
BENCHMARK(BM_TipSet)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_IdealSlice(benchmark::State& state) {
  const auto& w = weyl();
  for (auto _ : state) benchmark::DoNotOptimize(ideal_slice(w.A, w.pair, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_IdealSlice)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_UniqueOrder(benchmark::State& state) {
  const auto& w = weyl();
  CheckOptions opts{static_cast<std::size_t>(state.range(1))};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        check_unique_order_property(w.A, w.pair, OrderKind::DegreeOrder, w.V, static_cast<int>(state.range(0)), opts));
}
BENCHMARK(BM_UniqueOrder)->Args({6, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& state) {
  const auto& w = weyl();
  auto C = build_truncated_complex(w.A, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homology_dims(C, static_cast<std::size_t>(state.range(1))));
  state.counters["cells"] = static_cast<double>(C.total_dim());
}
BENCHMARK(BM_Homology)->Args({6, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

void BM_HHWeyl(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hh_weyl(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HHWeyl)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_HHBar(benchmark::State& state) {
  auto B = dual_numbers();
  for (auto _ : state) benchmark::DoNotOptimize(hh_bar(B, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_HHBar)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
