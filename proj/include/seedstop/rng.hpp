#pragma once

#include <cmath>
#include <cstdint>

namespace seedstop {

// Master seed used by every CLI command unless overridden.
inline constexpr std::int64_t kDefaultMasterSeed = 1729;

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Bijective on 64-bit ints.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for an independent substream addressed by (a, b) under a master
// seed. Work items seed their own stream from their index, so results do
// not depend on scheduling or thread count.
constexpr std::uint64_t derive_stream(std::uint64_t master, std::uint64_t a,
                                      std::uint64_t b = 0) {
  std::uint64_t z = mix64(master + 0x9e3779b97f4a7c15ULL);
  z = mix64(z ^ mix64(a + 0xbf58476d1ce4e5b9ULL));
  z = mix64(z ^ mix64(b + 0x94d049bb133111ebULL));
  return z;
}

// SplitMix64 generator. The standard <random> distributions are
// implementation-defined, so all sampling here is hand-rolled to keep
// recorded results bit-reproducible across compilers.
class Rng {
 public:
  explicit constexpr Rng(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // Uniform in [0, n). Multiply-shift map; bias is O(n / 2^64).
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Uniform in (0, 1] with 53-bit resolution. Never returns 0, so it is
  // safe under log().
  double uniform_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller. Consumes two uniforms per call; the
  // second variate is discarded to keep the stream position predictable.
  double normal() {
    const double u1 = uniform_unit();
    const double u2 = uniform_unit();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.28318530717958647692529 * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace seedstop
