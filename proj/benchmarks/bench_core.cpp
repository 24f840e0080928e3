#include <benchmark/benchmark.h>

#include "triobs/observability.hpp"

using namespace triobs;

namespace {
const Tiling& tiling() {
  static Tiling t = build_half_equilateral_tiling();
  return t;
}
}  // namespace

static void FoldedEigenfunctionEval(benchmark::State& state) {
  Mode k{static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
  Point2 p{0.21, 0.37};
  for (auto _ : state) {
    double v = folded_eigenfunction(tiling(), k, p);
    benchmark::DoNotOptimize(v);
    p.x1 = p.x1 < 0.5 ? p.x1 + 1e-9 : 0.1;  // defeat value caching
  }
}
BENCHMARK(FoldedEigenfunctionEval)->Arg(1)->Arg(8);

static void TilingCoverMonteCarlo(benchmark::State& state) {
  Region rect = Region::rectangle(unit_height_rectangle());
  for (auto _ : state) {
    TilingReport rep = verify_tiling(tiling(), rect, state.range(0), 7);
    benchmark::DoNotOptimize(rep.fraction_once);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(TilingCoverMonteCarlo)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void FoldedBasisGram(benchmark::State& state) {
  std::vector<Mode> modes = mode_box(state.range(0), state.range(0));
  for (auto _ : state) {
    FoldedBasis basis(tiling(), modes, 32);
    benchmark::DoNotOptimize(basis.norm_sq_triangle(0));
  }
}
BENCHMARK(FoldedBasisGram)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void ObservedEnergyStrip(benchmark::State& state) {
  static SpectralContext ctx(tiling(), mode_box(8, 8), 48);
  WaveState s = random_triangle_state(mode_box(8, 8), 5, 0);
  Region strip = strip_region(0.125);
  ObservedEnergyEvaluator ev(ctx, WaveBasis::TriangleFolded, s.modes, strip.cells(),
                             state.range(0), 16, 8);
  for (auto _ : state) {
    auto r = ev.observed(s);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(ObservedEnergyStrip)->Arg(2)->Arg(110)->Unit(benchmark::kMillisecond);

static void StripConstantsTable(benchmark::State& state) {
  for (auto _ : state) {
    StripObsConstants sc = strip_constants(0.125, 110.0, 64);
    benchmark::DoNotOptimize(sc.c_alpha);
  }
}
BENCHMARK(StripConstantsTable);

BENCHMARK_MAIN();
