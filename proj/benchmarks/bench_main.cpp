#include <benchmark/benchmark.h>

#include <random>

#include "vspace/coding.hpp"
#include "vspace/connectivity.hpp"

namespace {

// Path 0 - 1 - ... - n-1 where every vicinity of p reaches p+1, so the
// endpoints are connected and brute force must visit all 2^(n-1) covers.
vspace::FiniteVSpace ladder(std::size_t n) {
  vspace::FiniteVSpace space{vspace::Mode::strong, n, {}};
  for (std::size_t x = 0; x < n; ++x) {
    const auto p = static_cast<vspace::Point>(x);
    std::vector<vspace::Vicinity> vs;
    if (x + 1 < n) {
      vs.emplace_back(std::vector<vspace::Point>{p, p + 1});
      // n >= 3, so p + 2 exists for p = 0.
      vs.emplace_back(x > 0 ? std::vector<vspace::Point>{p - 1, p, p + 1} : std::vector<vspace::Point>{p, p + 1, p + 2});
    } else {
      vs.emplace_back(std::vector<vspace::Point>{p});
    }
    space.systems.push_back({p, vspace::Mode::strong, vs});
  }
  return space;
}

void BM_connected(benchmark::State& state, vspace::Engine engine) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto space = ladder(n);
  for (auto _ : state) {
    auto verdict = vspace::is_connected(space, 0, static_cast<vspace::Point>(n - 1), {engine, 1u << 24, true});
    benchmark::DoNotOptimize(verdict);
  }
}
BENCHMARK_CAPTURE(BM_connected, brute, vspace::Engine::brute)->DenseRange(6, 16, 5);
BENCHMARK_CAPTURE(BM_connected, pruned, vspace::Engine::pruned)->DenseRange(6, 16, 5);

vspace::EnumerationOracle scripted_oracle() {
  return vspace::EnumerationOracle(10, {{3, 1}, {5, 4}, {6, 2}, {7, 7}, {9, 3}, {10, 5}});
}

void BM_build_coded_space(benchmark::State& state) {
  const auto oracle = scripted_oracle();
  const vspace::CodedSpaceConfig config{0, 2, static_cast<std::uint64_t>(state.range(0)), 10};
  for (auto _ : state) benchmark::DoNotOptimize(vspace::build_coded_space(oracle, config));
}
BENCHMARK(BM_build_coded_space)->Arg(200)->Arg(2000);

void BM_roundtrip(benchmark::State& state) {
  const auto oracle = scripted_oracle();
  const vspace::CodedSpaceConfig config{0, 2, static_cast<std::uint64_t>(state.range(0)), 10};
  for (auto _ : state) benchmark::DoNotOptimize(vspace::verify_roundtrip(oracle, config));
}
BENCHMARK(BM_roundtrip)->Arg(200)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
