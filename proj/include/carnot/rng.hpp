#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace carnot {

/// xoshiro256** (Blackman & Vigna), seeded through splitmix64. The output
/// sequence is fully specified, so runs reproduce across platforms.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;
  static constexpr std::string_view kName = "xoshiro256**/splitmix64";

  explicit Xoshiro256(std::uint64_t seed);

  /// Independent substream `stream` of `seed`, e.g. one per work block.
  static Xoshiro256 substream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t operator()();
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::array<std::uint64_t, 4> s_{};
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace carnot
