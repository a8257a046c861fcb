#pragma once

#include <cstdint>
#include <vector>

#include "epsnet/random.hpp"
#include "epsnet/range_space.hpp"

namespace testkit {

using epsnet::RangeSpace;
using Raw = std::vector<std::vector<std::size_t>>;

inline RangeSpace uniform(std::size_t n, const Raw& ranges, std::string name = "t") {
  return RangeSpace::build(n, epsnet::uniform_weights(n), ranges, std::move(name));
}

inline RangeSpace singletons(std::size_t n, std::size_t count) {
  Raw r;
  for (std::size_t i = 0; i < count; ++i) r.push_back({i});
  return uniform(n, r, "singletons");
}

inline RangeSpace singletons(std::size_t n) { return singletons(n, n); }

inline RangeSpace intervals(std::size_t n) {
  Raw r;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      std::vector<std::size_t> run;
      for (std::size_t x = a; x <= b; ++x) run.push_back(x);
      r.push_back(run);
    }
  return uniform(n, r, "intervals");
}

inline RangeSpace power_set(std::size_t n) {
  Raw r;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.push_back(i);
    r.push_back(s);
  }
  return uniform(n, r, "powerset");
}

/// Prefix chain {0}, {0,1}, ..., {0..n-1}.
inline RangeSpace chain(std::size_t n) {
  Raw r;
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < n; ++i) {
    s.push_back(i);
    r.push_back(s);
  }
  return uniform(n, r, "chain");
}

// Two small weighted instances whose measures were tabulated by the Python oracle.
inline RangeSpace fixed_a() {
  return RangeSpace::build(7, {3, 1, 2, 1, 1, 2, 1},
                           Raw{{0, 1}, {1, 2, 3}, {2, 4}, {0, 5, 6}, {3}, {4, 5}, {1, 6}, {0, 2, 4, 6}}, "A");
}

inline RangeSpace fixed_b() {
  return uniform(6, Raw{{0, 1, 2}, {2, 3}, {3, 4, 5}, {0, 5}, {1, 4}, {0, 1, 2, 3, 4, 5}}, "B");
}

/// Lower-bound family (k=1, d=2, l=1, m=2): both 1-subsets of {0,1} and all
/// 2-subsets of {2,3,4}.
inline RangeSpace lower_bound_small() {
  return uniform(5, Raw{{0}, {1}, {2, 3}, {2, 4}, {3, 4}}, "lb-1212");
}

/// 2..max_n points with weights 1..3, up to max_ranges random ranges (each point w.p. 1/3).
inline RangeSpace random_space(std::uint64_t seed, std::size_t max_n, std::size_t max_ranges) {
  epsnet::Rng rng(seed);
  const std::size_t n = 2 + rng.below(max_n - 1);
  std::vector<std::int64_t> w(n);
  for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng.below(3));
  Raw raw;
  const std::size_t count = 1 + rng.below(max_ranges);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::size_t> r;
    for (std::size_t x = 0; x < n; ++x)
      if (rng.below(3) == 0) r.push_back(x);
    raw.push_back(r);
  }
  return RangeSpace::build(n, w, raw, "rand" + std::to_string(seed));
}

}  // namespace testkit
