#pragma once

#include <cstdint>
#include <string_view>

#include "rigidity/fp.hpp"

namespace rigidity {

// Deterministic seed derivation: every randomized subtask gets its seed from
// the root seed plus a canonical tag, so results are reproducible regardless
// of evaluation order.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t derive_seed(std::uint64_t root, std::string_view tag, std::uint64_t index = 0) {
  return splitmix64(root ^ splitmix64(fnv1a(tag)) ^ splitmix64(index * 0x9e3779b97f4a7c15ull + 1));
}

// SplitMix64 stream; used instead of std::uniform_int_distribution so the
// sampled values are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  // Uniform residue mod kPrime (rejection sampling keeps it exactly uniform).
  Fp field_element() {
    constexpr std::uint64_t limit = kPrime * 4;  // < 2^64, multiple of kPrime
    for (;;) {
      std::uint64_t x = next();
      if (x < limit) return Fp(x % kPrime);
    }
  }

  // Uniform integer in [lo, hi].
  long range(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5247494431ull;  // CLI default root seed

}  // namespace rigidity
