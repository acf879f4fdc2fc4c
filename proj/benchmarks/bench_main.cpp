#include "quasitile/delzant.hpp"
#include "quasitile/moment.hpp"
#include "quasitile/tiling.hpp"
#include "quasitile/validate.hpp"

#include <benchmark/benchmark.h>

using namespace quasitile;

namespace {

void BM_GoldenMultiply(benchmark::State& state) {
  GoldenRat x(Rational(3, 7), Rational(-5, 11));
  const GoldenRat y(Rational(2, 3), Rational(1, 5));
  for (auto _ : state) {
    x = x * y;
    x = x / y;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_GoldenMultiply);

void BM_GoldenExtSign(benchmark::State& state) {
  const GoldenExt x(GoldenRat(Rational(-1, 2), Rational(3, 2)), GoldenRat(Rational(-1, 3), Rational(1, 7)));
  for (auto _ : state) benchmark::DoNotOptimize(x.sign());
}
BENCHMARK(BM_GoldenExtSign);

void BM_Orient(benchmark::State& state) {
  const QuasiPoint a(3, -1, 4, 1), b(-5, 9, 2, -6), c(5, 3, -5, 8);
  for (auto _ : state) benchmark::DoNotOptimize(orient(a, b, c));
}
BENCHMARK(BM_Orient);

void BM_Generate(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate(SeedPreset::Sun, depth));
}
BENCHMARK(BM_Generate)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Validate(benchmark::State& state) {
  const Patch p = generate(SeedPreset::Sun, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate(p));
  state.counters["triangles"] = static_cast<double>(p.triangles.size());
}
BENCHMARK(BM_Validate)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_NormalizedDescriptor(benchmark::State& state) {
  const RhombusTile t{TileKind::Thin, StarIndex(3), QuasiPoint(12, -7, 3, 40)};
  for (auto _ : state) benchmark::DoNotOptimize(normalized_descriptor(t));
}
BENCHMARK(BM_NormalizedDescriptor)->Unit(benchmark::kMicrosecond);

void BM_MomentImage(benchmark::State& state) {
  const QuasifoldDescriptor d = normalized_descriptor(canonical_tile(TileKind::Thick));
  for (auto _ : state) benchmark::DoNotOptimize(moment_image(d, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MomentImage)->Arg(11)->Arg(101)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
