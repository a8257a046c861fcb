#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epsnet/errors.hpp"
#include "epsnet/range_space.hpp"
#include "epsnet/rational.hpp"

namespace epsnet {

struct LowerBoundParams {
  std::size_t k = 1;
  std::size_t d = 1;
  std::size_t l = 1;
  std::size_t m = 1;
};

/// l m (d-1) + l k (2^m - 1)
std::size_t lower_bound_point_count(const LowerBoundParams& p);
/// sum_i l C(k 2^i + d - 1, k 2^i)
std::uint64_t lower_bound_range_count(const LowerBoundParams& p);
/// Whether l k 2^m < n < l k 2^(m+1), the size estimate assumed for the family.
bool lower_bound_premise(const LowerBoundParams& p);
/// k / n, the scale at which the family is analysed.
Rational lower_bound_eps(const LowerBoundParams& p);

/// For each level i < m and copy j < l, a fresh block of k 2^i + d - 1 points
/// carrying all of its (k 2^i)-subsets as ranges; uniform weights. Throws
/// CapExceeded when the range count is above cap.
RangeSpace gen_lower_bound_family(const LowerBoundParams& p, std::uint64_t cap = 100'000);

enum class GeometryKind { intervals, halfplanes, disks, halfspaces3d };

std::string to_string(GeometryKind k);
std::optional<GeometryKind> parse_geometry_kind(std::string_view text);
std::size_t geometry_dimension(GeometryKind k);

/// Largest absolute coordinate accepted; keeps every predicate inside 128 bits.
inline constexpr std::int64_t kMaxCoordinate = 1'000'000;

using Coordinates = std::vector<std::vector<std::int64_t>>;

/// All distinct nonempty traces of closed intervals, halfplanes, disks or
/// halfspaces on the points, enumerated with exact integer predicates.
/// Coincident points always share their traces. Empty weights mean uniform.
/// Throws std::invalid_argument on dimension mismatch or coordinates beyond
/// kMaxCoordinate.
RangeSpace gen_geometric(GeometryKind kind, const Coordinates& points, std::vector<std::int64_t> weights = {},
                         std::string name = {});

/// count points with integer coordinates uniform in [0, coord_max].
Coordinates random_points(std::size_t count, std::size_t dim, std::int64_t coord_max, std::uint64_t seed);

/// Parses rows of comma-separated integers, one point per line; blank lines
/// and lines starting with '#' are skipped.
Coordinates parse_points_csv(std::string_view text);

enum class SizeLaw { uniform, geometric, fixed };
enum class WeightLaw { ones, uniform };

struct RandomSpec {
  std::size_t n = 1;
  std::size_t num_ranges = 0;
  SizeLaw size_law = SizeLaw::uniform;
  /// size for the fixed law
  std::size_t fixed_size = 1;
  WeightLaw weight_law = WeightLaw::ones;
  std::int64_t w_max = 1;
};

std::string to_string(SizeLaw s);
std::optional<SizeLaw> parse_size_law(std::string_view text);
std::string to_string(WeightLaw w);
std::optional<WeightLaw> parse_weight_law(std::string_view text);

/// Range sizes uniform on 1..n, geometric (P(s) proportional to 2^-s on 1..n)
/// or fixed; members a uniform subset of that size; weights all 1 or uniform
/// on 1..w_max. Duplicates collapse, so fewer than num_ranges may remain.
RangeSpace gen_random(const RandomSpec& spec, std::uint64_t seed, std::string name = {});

}  // namespace epsnet
