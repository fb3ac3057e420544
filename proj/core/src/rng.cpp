#include "markovcat/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace markovcat {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag0, std::uint64_t tag1) {
  std::uint64_t s = seed;
  splitmix64(s);
  s ^= 0x6a09e667f3bcc909ull + tag0;
  splitmix64(s);
  s ^= 0xbb67ae8584caa73bull + tag1;
  return splitmix64(s);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below requires bound >= 1");
  const std::uint64_t rem = std::numeric_limits<std::uint64_t>::max() % bound;
  // threshold is the largest multiple of bound representable in 64 bits
  const std::uint64_t threshold = std::numeric_limits<std::uint64_t>::max() - rem;
  for (;;) {
    const std::uint64_t draw = next();
    if (draw < threshold || rem == bound - 1) return draw % bound;
  }
}

std::vector<unsigned> Rng::composition(unsigned total, unsigned parts) {
  if (parts == 0) throw std::invalid_argument("composition requires parts >= 1");
  if (parts == 1) return {total};
  // Choose parts-1 distinct bar positions among total+parts-1 slots.
  const unsigned slots = total + parts - 1;
  std::vector<unsigned> bars;
  bars.reserve(parts - 1);
  // Partial Fisher-Yates over implicit [0, slots).
  std::vector<unsigned> pool(slots);
  for (unsigned i = 0; i < slots; ++i) pool[i] = i;
  for (unsigned k = 0; k < parts - 1; ++k) {
    const auto j = static_cast<unsigned>(below(slots - k));
    std::swap(pool[k], pool[k + j]);
    bars.push_back(pool[k]);
  }
  std::sort(bars.begin(), bars.end());
  std::vector<unsigned> out(parts);
  unsigned prev = 0;
  for (unsigned k = 0; k < parts - 1; ++k) {
    out[k] = bars[k] - prev;
    prev = bars[k] + 1;
  }
  out[parts - 1] = slots - prev;
  return out;
}

}  // namespace markovcat
