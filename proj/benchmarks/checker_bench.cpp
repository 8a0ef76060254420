#include <benchmark/benchmark.h>

#include "otcomp/checker.hpp"
#include "otcomp/composition.hpp"
#include "otcomp/document.hpp"
#include "otcomp/primitives.hpp"
#include "otcomp/simulator.hpp"

using namespace otcomp;

namespace {

Bounds string_bounds(int max_len) {
  Bounds b;
  b.alphabet = 2;
  b.max_len = max_len;
  return b;
}

void BM_Cp1Cchar(benchmark::State& state) {
  const auto c = cchar();
  for (auto _ : state) benchmark::DoNotOptimize(check_cp1(*c));
}
BENCHMARK(BM_Cp1Cchar);

void BM_Cp1String(benchmark::State& state) {
  const auto s = bare_string();
  const auto b = string_bounds(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_cp1(*s, b));
}
BENCHMARK(BM_Cp1String)->DenseRange(1, 3);

void BM_Cp2String(benchmark::State& state) {
  const auto s = bare_string();
  const auto b = string_bounds(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_cp2(*s, b));
}
BENCHMARK(BM_Cp2String)->DenseRange(1, 3);

void BM_ConsistencySetchar(benchmark::State& state) {
  const auto sc = dynamic_compose(set_pattern(SetVariant::kGuarded), cchar());
  for (auto _ : state) benchmark::DoNotOptimize(check_consistency(*sc));
}
BENCHMARK(BM_ConsistencySetchar)->Unit(benchmark::kMillisecond);

void BM_ConsistencyFchar(benchmark::State& state) {
  const auto f = static_compose({cchar(), cnat(), ccolor()});
  for (auto _ : state) benchmark::DoNotOptimize(check_consistency(*f));
}
BENCHMARK(BM_ConsistencyFchar)->Unit(benchmark::kMillisecond);

void BM_SimulateFig2(benchmark::State& state) {
  const Json j{{"component", "string"},
               {"base", "efecte"},
               {"ops", Json::array({Json{{"site", 1}, {"method", {{"ctor", "Ins"}, {"args", {1, "f"}}}}},
                                    Json{{"site", 2}, {"method", {{"ctor", "Del"}, {"args", {5}}}}}})},
               {"delivery", "all"}};
  const auto s = load_scenario(j);
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(s));
}
BENCHMARK(BM_SimulateFig2);

void BM_DocumentDemo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_document_demo(false));
}
BENCHMARK(BM_DocumentDemo)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
