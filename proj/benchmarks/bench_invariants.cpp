#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "gaussindex/census.hpp"
#include "gaussindex/gauss.hpp"
#include "gaussindex/invariants.hpp"
#include "gaussindex/moves.hpp"

using namespace gaussindex;

namespace {

std::vector<GaussDiagram> sample(std::size_t chords, std::size_t count) {
  std::mt19937_64 rng(chords);
  std::vector<GaussDiagram> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_diagram(chords, rng));
  return out;
}

void BM_FInvariant(benchmark::State& state) {
  const auto diagrams = sample(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(f_invariant(diagrams[i++ % diagrams.size()]));
}
BENCHMARK(BM_FInvariant)->RangeMultiplier(2)->Range(4, 64);

void BM_CanonicalCode(benchmark::State& state) {
  const auto diagrams = sample(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(diagrams[i++ % diagrams.size()]));
}
BENCHMARK(BM_CanonicalCode)->RangeMultiplier(2)->Range(4, 64);

void BM_ParseGaussCode(benchmark::State& state) {
  const auto diagrams = sample(static_cast<std::size_t>(state.range(0)), 64);
  std::vector<std::string> codes;
  for (const auto& d : diagrams) codes.push_back(serialize(d));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(parse_gauss_code(codes[i++ % codes.size()]));
}
BENCHMARK(BM_ParseGaussCode)->Arg(8)->Arg(64);

void BM_RandomWalk(benchmark::State& state) {
  const auto start = sample(8, 1).front();
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_walk(start, 50, seed++, 30));
}
BENCHMARK(BM_RandomWalk);

void BM_Census(benchmark::State& state) {
  CensusOptions options;
  options.chords = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const auto summary = run_census(options, [](const CensusRecord&) {});
    benchmark::DoNotOptimize(summary.classes);
  }
}
BENCHMARK(BM_Census)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
