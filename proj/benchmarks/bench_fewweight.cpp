#include <benchmark/benchmark.h>

#include "fewweight/code.hpp"
#include "fewweight/gf2m.hpp"
#include "fewweight/linearized.hpp"
#include "fewweight/weil.hpp"

namespace bm = benchmark;
using namespace fewweight;

static void BM_FieldBuild(bm::State& st) {
  const int m = static_cast<int>(st.range(0));
  for (auto _ : st) {
    auto f = Field::build(m);
    bm::DoNotOptimize(f);
  }
}
BENCHMARK(BM_FieldBuild)->Arg(8)->Arg(12)->Arg(16)->Unit(bm::kMillisecond);

static void BM_FieldMul(bm::State& st) {
  const Field field = Field::build(static_cast<int>(st.range(0)));
  std::uint32_t a = 1, b = 3;
  for (auto _ : st) {
    Element c = field.mul(Element(a), Element(b));
    bm::DoNotOptimize(c);
    a = (a * 5 + 1) & (field.size() - 1);
    b = (b * 7 + 3) & (field.size() - 1);
  }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16);

static void BM_WeightDistribution(bm::State& st) {
  const int m = static_cast<int>(st.range(0));
  const Field field = Field::build(m);
  const LinearCode code = build_code(field, 1, defining_set(field, DefiningSetKind::D0));
  for (auto _ : st) {
    auto dist = weight_distribution(code, EnumerationOptions{std::uint64_t{1} << 40, 1});
    bm::DoNotOptimize(dist);
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(field.size()) *
                       static_cast<std::int64_t>(code.length()));
}
BENCHMARK(BM_WeightDistribution)->DenseRange(8, 14, 2)->Unit(bm::kMillisecond);

static void BM_WeilDirectSpectrum(bm::State& st) {
  const Field field = Field::build(static_cast<int>(st.range(0)));
  const WeilEvaluator weil(field, 1);
  for (auto _ : st) {
    auto s = weil.direct_spectrum(field.generator());
    bm::DoNotOptimize(s);
  }
}
BENCHMARK(BM_WeilDirectSpectrum)->Arg(10)->Arg(12)->Arg(14)->Unit(bm::kMicrosecond);

static void BM_WeilClosedSpectrum(bm::State& st) {
  const Field field = Field::build(static_cast<int>(st.range(0)));
  const WeilEvaluator weil(field, 1);
  for (auto _ : st) {
    auto s = weil.closed_spectrum(field.generator());
    bm::DoNotOptimize(s);
  }
}
BENCHMARK(BM_WeilClosedSpectrum)->Arg(10)->Arg(12)->Arg(14)->Unit(bm::kMicrosecond);

static void BM_LinearizedSolve(bm::State& st) {
  const Field field = Field::build(12);
  const AffineLinearizedSolver solver(field, 2, field.generator());
  std::uint32_t r = 1;
  for (auto _ : st) {
    auto x = solver.solve_one(Element(r));
    bm::DoNotOptimize(x);
    r = (r * 5 + 1) & (field.size() - 1);
  }
}
BENCHMARK(BM_LinearizedSolve);
BENCHMARK_MAIN();
