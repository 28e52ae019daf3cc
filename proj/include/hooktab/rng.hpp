#pragma once

#include <cstdint>
#include <limits>

#include "hooktab/error.hpp"

namespace hooktab {

namespace detail {

// splitmix64 finalizer; also used on its own as an avalanche mix.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  return mix64(state);
}

inline std::uint64_t rotl64(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

}  // namespace detail

/// Uniform draw from [0, n) given a source of uniform 64-bit words, by
/// rejection: raw words at or above the largest multiple of n are redrawn, so
/// every residue is hit by exactly the same number of accepted words.
template <typename Source>
std::uint64_t uniform_below(Source&& next_word, std::uint64_t n) {
  if (n == 0) fail(errc::invalid_input, "uniform_below: empty range");
  std::uint64_t rem = std::numeric_limits<std::uint64_t>::max() % n;
  if (rem == n - 1) return next_word() % n;  // n divides 2^64, no rejection needed
  std::uint64_t cutoff = std::numeric_limits<std::uint64_t>::max() - rem;  // multiple of n
  std::uint64_t v = next_word();
  while (v >= cutoff) v = next_word();
  return v % n;
}

/// Deterministic seedable generator (xoshiro256** with splitmix64 seeding),
/// implemented here so that identical seeds give identical streams on every
/// platform. Platform generators are deliberately not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t x = seed;
    for (auto& w : state_) w = detail::splitmix64_next(x);
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() {
    std::uint64_t result = detail::rotl64(state_[1] * 5, 7) * 9;
    std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl64(state_[3], 45);
    return result;
  }

  std::uint64_t below(std::uint64_t n) {
    return uniform_below([this] { return next(); }, n);
  }

  /// Uniform on the inclusive range [lo, hi].
  long long uniform(long long lo, long long hi) {
    if (lo > hi) fail(errc::invalid_input, "uniform: lo > hi");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<long long>(below(span));
  }

  /// Seed-splitting for batch work: worker/sample i uses mix(master, i).
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    return detail::mix64(seed ^ detail::mix64(index + 0x9E3779B97F4A7C15ULL));
  }

 private:
  std::uint64_t state_[4];
  std::uint64_t seed_;
};

}  // namespace hooktab
