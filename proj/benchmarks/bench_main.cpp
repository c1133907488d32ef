#include <benchmark/benchmark.h>

#include "positroid/analysis.hpp"
#include "positroid/ideal.hpp"
#include "positroid/verify.hpp"

using namespace positroid;

namespace {

LeDiagram rectangle(int rows, int cols) {
  std::vector<int> shape(rows, cols);
  std::vector<Cell> fill;
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) fill.push_back({r, c});
  return LeDiagram(shape, fill);
}

}  // namespace

static void BM_ParseValidate(benchmark::State& state) {
  for (auto _ : state) {
    LeDiagram d = parse_grid("**\n**\n*");
    benchmark::DoNotOptimize(validate_le(d));
  }
}
BENCHMARK(BM_ParseValidate);

static void BM_BuildGraph(benchmark::State& state) {
  LeDiagram d = rectangle(3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(d));
}
BENCHMARK(BM_BuildGraph);

static void BM_IsBasis(benchmark::State& state) {
  LeGraph g = build_graph(rectangle(3, 4));
  LabelSet s = LabelSet::of({4, 6, 7});
  for (auto _ : state) benchmark::DoNotOptimize(is_basis(g, s));
}
BENCHMARK(BM_IsBasis);

static void BM_EnumerateBases(benchmark::State& state) {
  LeGraph g = build_graph(rectangle(3, 4));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_bases(g));
}
BENCHMARK(BM_EnumerateBases);

static void BM_EnumerateFamilies(benchmark::State& state) {
  LeGraph g = build_graph(rectangle(3, 4));
  LabelSet s = LabelSet::of({5, 6, 7});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_families(g, s));
}
BENCHMARK(BM_EnumerateFamilies);

static void BM_HVectorActivity(benchmark::State& state) {
  Positroid p = enumerate_bases(build_graph(rectangle(3, 4)));
  for (auto _ : state) benchmark::DoNotOptimize(h_vector_activity(p));
}
BENCHMARK(BM_HVectorActivity);

static void BM_PhiImage(benchmark::State& state) {
  Positroid p = enumerate_bases(build_graph(rectangle(3, 4)));
  for (auto _ : state) benchmark::DoNotOptimize(phi_image(p));
}
BENCHMARK(BM_PhiImage);

static void BM_Analyze(benchmark::State& state) {
  LeDiagram d = parse_grid("**\n**\n*");
  for (auto _ : state) benchmark::DoNotOptimize(analyze(d));
}
BENCHMARK(BM_Analyze);

static void BM_CheckDiagram(benchmark::State& state) {
  LeDiagram d = rectangle(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_diagram(d));
}
BENCHMARK(BM_CheckDiagram);

BENCHMARK_MAIN();
