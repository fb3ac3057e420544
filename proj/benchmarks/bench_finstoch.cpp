#include <benchmark/benchmark.h>

#include "markovcat/finstoch.hpp"
#include "markovcat/kernel.hpp"

namespace {

using namespace markovcat;
using namespace markovcat::finstoch;

const FinStoch cat;

FinSet sized(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return FinSet(labels);
}

void BM_compose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  const auto x = sized(n);
  const auto f = random_kernel(x, x, rng, 6);
  const auto g = random_kernel(x, x, rng, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cat.compose(f, g));
  }
}
BENCHMARK(BM_compose)->Arg(4)->Arg(16)->Arg(64);

void BM_tensor(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  const auto x = sized(n);
  const auto f = random_kernel(x, x, rng, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cat.tensor(f, f));
  }
}
BENCHMARK(BM_tensor)->Arg(4)->Arg(8)->Arg(16);

void BM_displays_ci(benchmark::State& state) {
  const auto factors = static_cast<std::size_t>(state.range(0));
  Rng rng(11);
  const auto bit = sized(2);
  std::vector<FinSet> split_factors(factors, bit);
  auto p = random_kernel(FinSet::unit(), bit, rng, 6);
  for (std::size_t k = 1; k < factors; ++k) {
    p = cat.tensor(p, random_kernel(FinSet::unit(), bit, rng, 6));
  }
  const kernel::TensorSplit<FinSet> split{split_factors};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel::displays_ci(cat, p, split));
  }
}
BENCHMARK(BM_displays_ci)->Arg(2)->Arg(4)->Arg(6);

void BM_causality_probe(benchmark::State& state) {
  Rng rng(13);
  const auto x = sized(3);
  const auto f = random_kernel(x, x, rng, 2);
  const auto g = random_kernel(x, x, rng, 2);
  const auto h1 = random_kernel(x, x, rng, 2);
  const auto h2 = random_kernel(x, x, rng, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel::check_causality_triple(cat, f, g, h1, h2));
  }
}
BENCHMARK(BM_causality_probe);

}  // namespace
