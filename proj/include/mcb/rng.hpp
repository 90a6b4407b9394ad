#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace mcb {

// Deterministic random source. mt19937_64 has a fully specified output
// sequence, and all derived draws below are implemented manually so that
// results are bit-identical across platforms and standard libraries
// (std::uniform_int_distribution and friends are not portable).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform integer in [0, n) by rejection sampling; n >= 1.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t rem = (UINT64_MAX % n + 1) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (rem == 0 || r < UINT64_MAX - rem + 1) return r % n;
    }
  }

  // Uniform double in [0, 1), 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform double in (0, 1]; safe to pass to log().
  double unit_pos() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

private:
  std::mt19937_64 eng_;
};

// splitmix64 mix of (seed, index): independent substream seeds for
// per-task generators, so parallel work is schedule-independent.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + index * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Fisher-Yates shuffle driven by Rng::below; deterministic for a fixed seed.
template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace mcb
