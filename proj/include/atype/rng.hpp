#pragma once

#include <cstdint>
#include <random>

namespace atype {

// All randomized code in this library draws from a caller-owned Rng through
// the helpers below. std::random distributions are avoided on purpose: their
// output is not pinned by the standard, and experiment reproducibility
// depends on the exact draw sequence.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Stable seed fan-out: mixing in a fixed tag per component keeps each cell's
// stream independent of how many other cells exist.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0,
                                 std::uint64_t d = 0) {
  std::uint64_t h = splitmix64(master ^ 0x61747970652d7631ull);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  h = splitmix64(h ^ c);
  h = splitmix64(h ^ d);
  return h;
}

inline std::uint64_t rng_u64(Rng& rng) { return rng(); }

// Unbiased integer in [0, n). Rejection sampling on the top of the range.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

inline std::size_t rng_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng_below(rng, n));
}

inline double rng_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool rng_chance(Rng& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return rng_unit(rng) < p;
}

inline bool rng_bit(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace atype
