#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace markovcat {

/// splitmix64 step; used to derive independent substream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Mixes a seed with stream tags into a fresh seed. Deriving per-shard and
/// per-case seeds this way keeps all suites reproducible and makes results
/// independent of how work is distributed over shards.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag0, std::uint64_t tag1 = 0);

/// Deterministic random source. mt19937_64 has a fully specified sequence,
/// and all integer draws go through rejection sampling below, so identical
/// seeds give identical draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform draw from {0, ..., bound-1} by rejection. bound must be >= 1.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform draw from {lo, ..., hi} inclusive.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  bool coin() { return (next() & 1u) != 0; }

  /// Uniformly random weak composition of `total` into `parts` nonnegative
  /// summands, sampled via a uniform (parts-1)-subset of bar positions.
  std::vector<unsigned> composition(unsigned total, unsigned parts);

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }
  }

  Rng fork(std::uint64_t tag) { return Rng(derive_seed(next(), tag)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace markovcat
