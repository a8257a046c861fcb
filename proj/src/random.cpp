#include "epsnet/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace epsnet {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

WeightedSampler::WeightedSampler(std::span<const std::int64_t> weights) {
  cumulative_.reserve(weights.size());
  std::int64_t acc = 0;
  for (auto w : weights) {
    if (w < 0) throw std::invalid_argument("negative weight");
    acc += w;
    cumulative_.push_back(acc);
  }
  if (acc <= 0) throw std::invalid_argument("WeightedSampler needs positive total weight");
}

std::size_t WeightedSampler::draw(Rng& rng) const {
  const auto r = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(total())));
  // first index whose cumulative weight exceeds r; zero-weight points are never hit
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
  return static_cast<std::size_t>(it - cumulative_.begin());
}

}  // namespace epsnet
