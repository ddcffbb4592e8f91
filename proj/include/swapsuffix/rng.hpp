#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace swapsuffix {

/// SplitMix64 finalizer (Steele, Lea & Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based SplitMix64 stream.
///
/// Draw n of a stream keyed by `seed` is mix64(seed + (n + 1) * 0x9E3779B97F4A7C15),
/// so any draw can be recomputed from (seed, n) alone. All derived
/// distributions below are spelled out so a run replays bit-for-bit on any
/// platform; the std:: distributions are implementation-defined and are not
/// used for anything that feeds a result.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit constexpr CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

  constexpr std::uint64_t next() noexcept {
    ++counter_;
    return mix64(seed_ + counter_ * kGamma);
  }

  /// Uniform integer in [0, n) by rejection on the top of the 64-bit range.
  constexpr std::uint64_t below(std::uint64_t n) noexcept {
    if (n <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  constexpr bool bernoulli(double p) noexcept { return uniform() < p; }

  /// Standard normal via Box-Muller; consumes two draws, uses the cosine branch.
  double gaussian() noexcept {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  constexpr std::uint64_t seed() const noexcept { return seed_; }
  constexpr std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// FNV-1a over bytes, then finalized with mix64.
constexpr std::uint64_t hash_bytes(std::string_view bytes,
                                   std::uint64_t basis = 0xCBF29CE484222325ULL) noexcept {
  std::uint64_t h = basis;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

constexpr std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) noexcept {
  return mix64(h ^ (v + CounterRng::kGamma + (h << 6) + (h >> 2)));
}

}  // namespace swapsuffix
