#include <benchmark/benchmark.h>

#include "markovcat/montecarlo.hpp"

namespace {

using namespace markovcat;

void BM_kolmogorov_demo(benchmark::State& state) {
  montecarlo::CoinDemoConfig config;
  config.window = 1000;
  config.samples = static_cast<std::uint64_t>(state.range(0));
  config.seed = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(montecarlo::simulate_kolmogorov_demo(config));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(config.window * config.samples));
}
BENCHMARK(BM_kolmogorov_demo)->Arg(100)->Arg(1000);

void BM_kolmogorov_demo_sharded(benchmark::State& state) {
  montecarlo::CoinDemoConfig config;
  config.window = 1000;
  config.samples = 1000;
  config.seed = 5;
  config.shards = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(montecarlo::simulate_kolmogorov_demo(config));
  }
}
BENCHMARK(BM_kolmogorov_demo_sharded)->Arg(1)->Arg(2)->Arg(4);

}  // namespace
