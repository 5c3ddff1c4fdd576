// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "occat/classify.hpp"
#include "support/generators.hpp"

using namespace occat;

namespace {

GeneralObject sample_object(std::size_t branes) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < branes; ++i) names.push_back("b" + std::to_string(i));
  BraneSet set(names);
  std::vector<Entry> entries{Circle{}};
  for (std::size_t i = 0; i < 4; ++i) entries.push_back(Interval{Brane{0}, Brane{0}});
  return GeneralObject(set, entries);
}

std::vector<Cobordism> sample_batch(std::size_t n) {
  testing::CobordismGen gen(99, BraneSet({"a", "b", "c"}));
  std::vector<Cobordism> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(gen.any());
  return out;
}

void BM_EnumerateParallel(benchmark::State& state) {
  GeneralObject obj = sample_object(static_cast<std::size_t>(state.range(0)));
  const auto g = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(obj, g, g));
}

void BM_EnumerateSerial(benchmark::State& state) {
  GeneralObject obj = sample_object(static_cast<std::size_t>(state.range(0)));
  const auto g = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_classes(obj, g, g));
}

void BM_CanonicalizeParallel(benchmark::State& state) {
  auto batch = sample_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize_all(batch));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CanonicalizeSerial(benchmark::State& state) {
  auto batch = sample_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::canonicalize_all(batch));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_EnumerateParallel)->Args({1, 8})->Args({2, 4})->Args({3, 3})->UseRealTime();
BENCHMARK(BM_EnumerateSerial)->Args({1, 8})->Args({2, 4})->Args({3, 3})->UseRealTime();
BENCHMARK(BM_CanonicalizeParallel)->Arg(256)->Arg(4096)->UseRealTime();
BENCHMARK(BM_CanonicalizeSerial)->Arg(256)->Arg(4096)->UseRealTime();

BENCHMARK_MAIN();
