#include "epsnet/range_space.hpp"

#include <algorithm>
#include <unordered_set>

namespace epsnet {

void canonicalize_family(std::vector<PointSet>& family) {
  std::erase_if(family, [](const PointSet& s) { return s.empty(); });
  std::sort(family.begin(), family.end(), PointSetLexLess{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

RangeSpace RangeSpace::build(std::size_t n, std::vector<std::int64_t> weights,
                             const std::vector<std::vector<std::size_t>>& raw_ranges, std::string name) {
  if (n == 0) throw RangeSpaceError("ground set must have at least one point");
  std::vector<PointSet> sets;
  sets.reserve(raw_ranges.size());
  for (const auto& raw : raw_ranges) {
    PointSet s(n);
    for (auto i : raw) {
      if (i >= n) throw RangeSpaceError("range index " + std::to_string(i) + " out of range");
      s.set(i);
    }
    sets.push_back(std::move(s));
  }
  return build(n, std::move(weights), std::move(sets), std::move(name));
}

RangeSpace RangeSpace::build(std::size_t n, std::vector<std::int64_t> weights, std::vector<PointSet> ranges,
                             std::string name) {
  if (n == 0) throw RangeSpaceError("ground set must have at least one point");
  if (weights.size() != n) throw RangeSpaceError("weights length differs from n");
  RangeSpace space;
  space.n_ = n;
  space.support_ = PointSet(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i] < 0) throw RangeSpaceError("negative weight at point " + std::to_string(i));
    if (weights[i] > 0) space.support_.set(i);
    space.total_ += weights[i];
  }
  if (space.total_ <= 0) throw RangeSpaceError("zero total weight");
  for (const auto& r : ranges)
    if (r.capacity() != n) throw RangeSpaceError("range capacity differs from n");
  canonicalize_family(ranges);
  space.weights_ = std::move(weights);
  space.ranges_ = std::move(ranges);
  space.name_ = std::move(name);
  return space;
}

const PointSet& RangeSpace::range(std::size_t i) const {
  if (i >= ranges_.size()) throw RangeSpaceError("range index " + std::to_string(i) + " out of range");
  return ranges_[i];
}

std::int64_t RangeSpace::weight_of(const PointSet& s) const {
  std::int64_t w = 0;
  s.for_each([&](std::size_t i) { w += weights_[i]; });
  return w;
}

bool RangeSpace::measure_at_least(const PointSet& s, const Rational& threshold) const {
  return static_cast<__int128>(weight_of(s)) * threshold.den() >=
         static_cast<__int128>(threshold.num()) * total_;
}

bool RangeSpace::measure_at_most(const PointSet& s, const Rational& threshold) const {
  return static_cast<__int128>(weight_of(s)) * threshold.den() <=
         static_cast<__int128>(threshold.num()) * total_;
}

RangeSpace RangeSpace::with_name(std::string name) const {
  RangeSpace copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

RangeSpace RangeSpace::with_ranges(std::vector<PointSet> ranges) const {
  return build(n_, weights_, std::move(ranges), name_);
}

std::vector<std::int64_t> uniform_weights(std::size_t n) { return std::vector<std::int64_t>(n, 1); }

Rational measure(const RangeSpace& space, std::size_t range_index) {
  return space.measure_of(space.range(range_index));
}

std::int64_t rho_weight(const RangeSpace& space, const PointSet& a, const PointSet& b) {
  return space.weight_of(a ^ b);
}

Rational rho(const RangeSpace& space, std::size_t r1, std::size_t r2) {
  return Rational(rho_weight(space, space.range(r1), space.range(r2)), space.total_weight());
}

std::vector<PointSet> project(std::span<const PointSet> family, const PointSet& subset) {
  std::unordered_set<PointSet, PointSetHash> seen;
  seen.insert(PointSet(subset.capacity()));
  for (const auto& r : family) seen.insert(r & subset);
  std::vector<PointSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), PointSetLexLess{});
  return out;
}

std::vector<PointSet> project(const RangeSpace& space, const PointSet& subset) {
  if (subset.capacity() != space.size()) throw RangeSpaceError("subset capacity differs from n");
  return project(std::span<const PointSet>(space.ranges()), subset);
}

RangeSpace conditional(const RangeSpace& space, const PointSet& subset) {
  if (subset.capacity() != space.size()) throw RangeSpaceError("subset capacity differs from n");
  if (space.weight_of(subset) == 0) throw RangeSpaceError("conditioning on a set of zero measure");
  std::vector<std::int64_t> weights(space.size(), 0);
  subset.for_each([&](std::size_t i) { weights[i] = space.weights()[i]; });
  std::vector<PointSet> ranges;
  ranges.reserve(space.range_count());
  for (const auto& r : space.ranges()) ranges.push_back(r & subset);
  return RangeSpace::build(space.size(), std::move(weights), std::move(ranges), space.name());
}

}  // namespace epsnet
