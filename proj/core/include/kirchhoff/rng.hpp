#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace kirchhoff {

/// SplitMix64 pseudo-random generator (Steele, Lea & Flood 2014; constants
/// from Vigna's public-domain reference implementation).
///
/// The state advances by a fixed odd increment, so the generator is
/// effectively counter-based: seeding is O(1) and any two distinct seeds give
/// independent-looking streams. All randomness in this library flows through
/// this class so that a (seed -> output) mapping is identical on every
/// platform with IEEE-754 doubles. Stream id: kRngId in version.hpp.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0,1) built from the top 53 bits of next().
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal deviate, Marsaglia polar method (two uniforms per pair,
  /// no trigonometric calls). The spare value is cached.
  double next_gaussian();

  // UniformRandomBitGenerator interface.
  std::uint64_t operator()() { return next(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~0ull; }

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// FNV-1a 64-bit hash of a byte string (offset basis 0xcbf29ce484222325,
/// prime 0x100000001b3).
std::uint64_t fnv1a64(std::string_view bytes);

/// FNV-1a 64-bit hash over the little-endian 8-byte encodings of the given
/// words. Used to derive independent child seeds from a master seed.
std::uint64_t fnv1a64(std::initializer_list<std::uint64_t> words);

}  // namespace kirchhoff
