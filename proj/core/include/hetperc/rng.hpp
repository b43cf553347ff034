#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace hetperc {

inline constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/*
  Counter-based generator: the i-th output of stream (seed, stream) is a
  pure function of the three integers, so any realization can be
  regenerated independently of scheduling. Uses the SplitMix64 finalizer
  on a key derived from (seed, stream).
*/
class CounterRng {
 public:
  static constexpr const char* kScheme = "splitmix64-counter/v1";

  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_(splitmix64(splitmix64(seed) ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL))) {}

  std::uint64_t next_u64() noexcept {
    return splitmix64(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Unbiased integer in [0, bound), bound >= 1 (Lemire's rejection method).
  std::uint64_t below(std::uint64_t bound) noexcept {
    __extension__ using u128 = unsigned __int128;
    u128 m = static_cast<u128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<u128>(next_u64()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  template <class T>
  void shuffle(std::span<T> items) noexcept {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace hetperc
