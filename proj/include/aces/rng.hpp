#pragma once

#include <cstdint>
#include <vector>

namespace aces {

// SplitMix64: tiny, seedable, and cheap to split. Each derived stream is
// seeded through the mixer so streams for different indices are decorrelated
// regardless of how many streams exist.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, bound) via multiply-shift.
  std::uint64_t uniform_int(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Independent child stream; stream index 0 is reserved for labels by the
  // generative sampler, columns use 1..m.
  static Rng derive(std::uint64_t base_seed, std::uint64_t stream) {
    Rng mixer(base_seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
    return Rng(mixer.next());
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace aces
