#pragma once

#include <cstdint>

namespace rigidity {

// Fixed word-size prime field used by the randomized rank oracle.
// kPrime = 2^62 - 57. Primality is asserted by the test suite, not assumed.
inline constexpr std::uint64_t kPrime = 4611686018427387847ull;

struct Fp {
  std::uint64_t v = 0;  // always reduced mod kPrime

  constexpr Fp() = default;
  constexpr explicit Fp(std::uint64_t x) : v(x % kPrime) {}

  static Fp from_int(long long x) {
    long long r = x % static_cast<long long>(kPrime);
    if (r < 0) r += static_cast<long long>(kPrime);
    return Fp(static_cast<std::uint64_t>(r));
  }

  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.v + b.v;  // < 2^63, no overflow
    if (s >= kPrime) s -= kPrime;
    return Fp(s);
  }
  friend Fp operator-(Fp a, Fp b) {
    std::uint64_t s = a.v >= b.v ? a.v - b.v : a.v + kPrime - b.v;
    return Fp(s);
  }
  friend Fp operator*(Fp a, Fp b) {
    unsigned __int128 t = static_cast<unsigned __int128>(a.v) * b.v;
    return Fp(static_cast<std::uint64_t>(t % kPrime));
  }
  Fp operator-() const { return v == 0 ? *this : Fp(kPrime - v); }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
  bool is_zero() const { return v == 0; }

  Fp pow(std::uint64_t e) const {
    Fp base = *this, acc(1);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }
  Fp inv() const { return pow(kPrime - 2); }
};

}  // namespace rigidity
