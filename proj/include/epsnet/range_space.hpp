#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "epsnet/point_set.hpp"
#include "epsnet/rational.hpp"

namespace epsnet {

/// Precondition failures on range-space inputs (bad indices, zero mass, ...).
class RangeSpaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite ground set {0..n-1} with integer point weights and a family of
/// distinct nonempty ranges.
///
/// P(x) = weight(x) / W. Ranges are stored canonically: deduplicated as sets,
/// empty ones dropped, sorted lexicographically by their member lists.
/// Instances are immutable once built and safe to share between threads.
class RangeSpace {
 public:
  static RangeSpace build(std::size_t n, std::vector<std::int64_t> weights,
                          const std::vector<std::vector<std::size_t>>& raw_ranges, std::string name = {});
  static RangeSpace build(std::size_t n, std::vector<std::int64_t> weights, std::vector<PointSet> ranges,
                          std::string name = {});

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] const std::vector<std::int64_t>& weights() const { return weights_; }
  [[nodiscard]] std::int64_t total_weight() const { return total_; }
  [[nodiscard]] const std::vector<PointSet>& ranges() const { return ranges_; }
  [[nodiscard]] const PointSet& range(std::size_t i) const;
  [[nodiscard]] std::size_t range_count() const { return ranges_.size(); }
  [[nodiscard]] const std::string& name() const { return name_; }
  /// Points of positive weight.
  [[nodiscard]] const PointSet& support() const { return support_; }

  [[nodiscard]] std::int64_t weight_of(const PointSet& s) const;
  [[nodiscard]] Rational measure_of(const PointSet& s) const { return Rational(weight_of(s), total_); }
  /// measure_of(s) >= threshold, decided by cross-multiplication.
  [[nodiscard]] bool measure_at_least(const PointSet& s, const Rational& threshold) const;
  [[nodiscard]] bool measure_at_most(const PointSet& s, const Rational& threshold) const;

  [[nodiscard]] PointSet empty_set() const { return PointSet(n_); }

  RangeSpace with_name(std::string name) const;
  /// Same ground set and weights with a different range family (re-canonicalized).
  RangeSpace with_ranges(std::vector<PointSet> ranges) const;

 private:
  RangeSpace() = default;

  std::size_t n_ = 0;
  std::vector<std::int64_t> weights_;
  std::int64_t total_ = 0;
  std::vector<PointSet> ranges_;
  PointSet support_;
  std::string name_;
};

std::vector<std::int64_t> uniform_weights(std::size_t n);

/// Sorts, deduplicates and strips empty sets in place.
void canonicalize_family(std::vector<PointSet>& family);

Rational measure(const RangeSpace& space, std::size_t range_index);

/// P(R1 symmetric-difference R2).
Rational rho(const RangeSpace& space, std::size_t r1, std::size_t r2);

/// Weight of the symmetric difference, the integer numerator of rho.
std::int64_t rho_weight(const RangeSpace& space, const PointSet& a, const PointSet& b);

/// Distinct traces R ∩ Y over all ranges, in lexicographic order. The empty
/// trace is always included: the empty range is implicitly part of every
/// family, as the trivial halfspace and the empty disagreement region of the
/// target classifier are.
std::vector<PointSet> project(const RangeSpace& space, const PointSet& subset);
std::vector<PointSet> project(std::span<const PointSet> family, const PointSet& subset);

/// The space conditioned on A: weights zeroed outside A, ranges intersected
/// with A and re-canonicalized, so that P'(R) = P(R ∩ A) / P(A).
RangeSpace conditional(const RangeSpace& space, const PointSet& subset);

}  // namespace epsnet
