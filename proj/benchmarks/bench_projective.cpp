#include <benchmark/benchmark.h>

#include "markovcat/finstoch.hpp"
#include "markovcat/projective.hpp"

namespace {

using namespace markovcat;
using namespace markovcat::finstoch;
using namespace markovcat::projective;

const FinStoch cat;

StochMatrix coin() {
  return state(FinSet({"0", "1"}), {Rational(1, 3), Rational(2, 3)});
}

void BM_family_assign(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    // fresh family per iteration so memoization does not trivialize the cost
    const auto fam = iid_family(cat, coin(), IndexSet::naturals("i"));
    std::vector<std::size_t> window(depth);
    for (std::size_t k = 0; k < depth; ++k) window[k] = k;
    benchmark::DoNotOptimize(fam.assign_positions(window));
  }
}
BENCHMARK(BM_family_assign)->Arg(3)->Arg(6)->Arg(9);

void BM_validate_compatibility(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  const auto fam = iid_family(cat, coin(), IndexSet::naturals("i"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_compatibility(fam, depth));
  }
}
BENCHMARK(BM_validate_compatibility)->Arg(3)->Arg(5);

void BM_injection_action(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const auto fam = iid_family(cat, coin(), IndexSet::naturals("i"));
  std::vector<std::size_t> window(size);
  for (std::size_t k = 0; k < size; ++k) window[k] = k;
  std::vector<std::size_t> image(size);
  for (std::size_t k = 0; k < size; ++k) image[k] = size - 1 - k;
  const auto reversal = IndexInjection::permutation(image);
  for (auto _ : state) {
    benchmark::DoNotOptimize(injection_action(fam, reversal, window));
  }
}
BENCHMARK(BM_injection_action)->Arg(3)->Arg(5)->Arg(6);

}  // namespace
