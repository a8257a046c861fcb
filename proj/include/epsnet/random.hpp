#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace epsnet {

/// Name of the randomness scheme, written into every experiment summary.
/// Bump the suffix if stream derivation or any sampling primitive changes.
inline constexpr std::string_view kPrngName = "mt19937_64+splitmix64-streams/v1";

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic random source. Only the engine's raw 64-bit output is used;
/// the bounded-integer and real draws below are defined here so results do
/// not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Independent stream for (seed, stream index), e.g. one per Monte Carlo trial.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), bound > 0; unbiased by rejection.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Draws point indices i.i.d. proportionally to integer weights.
class WeightedSampler {
 public:
  explicit WeightedSampler(std::span<const std::int64_t> weights);

  [[nodiscard]] std::size_t draw(Rng& rng) const;
  [[nodiscard]] std::int64_t total() const { return cumulative_.empty() ? 0 : cumulative_.back(); }

 private:
  std::vector<std::int64_t> cumulative_;
};

}  // namespace epsnet
