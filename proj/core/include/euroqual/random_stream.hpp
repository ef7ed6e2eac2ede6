#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <ranges>

namespace euroqual {

/// SplitMix64 finalizer. Used to derive well-separated generator seeds from
/// (master seed, stream index) pairs.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of substream `index` under `master_seed`.
constexpr std::uint64_t substream_seed(std::uint64_t master_seed,
                                       std::uint64_t index) {
  return mix64(mix64(master_seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/// Deterministic variate source for one simulated season.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the standard.
/// The conversions to doubles and bounded integers are done here rather than
/// through <random> distributions so a seed reproduces identical seasons on
/// every standard library.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : engine_(substream_seed(master_seed, stream_index)) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    ++draws_;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). Requires n >= 1.
  std::uint64_t below(std::uint64_t n) {
    ++draws_;
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  /// Fisher-Yates shuffle; every permutation equally likely.
  template <std::ranges::random_access_range R>
  void shuffle(R&& items) {
    auto first = std::ranges::begin(items);
    for (auto i = static_cast<std::uint64_t>(std::ranges::size(items)); i > 1;
         --i) {
      const std::uint64_t j = below(i);
      std::ranges::iter_swap(first + (i - 1), first + j);
    }
  }

  /// Number of uniform() / below() calls served so far.
  std::uint64_t draws() const { return draws_; }

  friend bool operator==(const RandomStream& a, const RandomStream& b) {
    return a.engine_ == b.engine_;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace euroqual
