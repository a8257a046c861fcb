#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "epsnet/errors.hpp"
#include "epsnet/range_space.hpp"
#include "epsnet/rational.hpp"

namespace epsnet {

// ---------------------------------------------------------------------------
// VC dimension and projections
// ---------------------------------------------------------------------------

struct VcDimension {
  std::size_t d = 0;
  /// false: d is only a lower bound (a shattered set was found, maybe not the largest)
  bool exact = true;
  /// A shattered set of size d.
  std::vector<std::size_t> witness;
};

struct VcOptions {
  /// exact search refuses ground sets larger than this
  std::size_t cap = 24;
  /// randomized restarts for the lower-bound search
  std::size_t budget = 256;
  std::uint64_t seed = 0;
};

/// Whether every subset of `points` is a trace of the family (empty range adjoined).
bool is_shattered(std::span<const PointSet> family, std::span<const std::size_t> points);

/// Largest shattered set, found level by level: a (k+1)-set is tested only
/// when all of its k-subsets are shattered. The number of shattered sets never
/// exceeds |family| + 1, which keeps the search small. The cap applies to the
/// number of points covered by the family.
VcDimension vc_dimension_exact(std::span<const PointSet> family, std::size_t n, std::size_t cap = 24);
VcDimension vc_dimension_lower_bound(std::span<const PointSet> family, std::size_t n, std::size_t budget,
                                     std::uint64_t seed);

VcDimension vc_dimension(const RangeSpace& space, bool exact = true, const VcOptions& options = {});

/// Number of distinct traces on `points` (empty trace included) of size at most `max_size`.
std::size_t count_traces(std::span<const PointSet> family, std::span<const std::size_t> points,
                         std::size_t max_size = static_cast<std::size_t>(-1));

struct CountResult {
  std::size_t value = 0;
  /// false: maximum over a random sample of subsets, a lower bound
  bool exact = true;
};

struct EnumerationOptions {
  /// exhaustive when C(n, y) does not exceed this
  std::uint64_t max_subsets = 5'000'000;
  /// subsets tried in sampled mode
  std::size_t samples = 20'000;
  std::uint64_t seed = 0;
};

/// pi(y) = max |R|_Y| over |Y| = y.
CountResult projection_function(const RangeSpace& space, std::size_t y, const EnumerationOptions& options = {});

/// phi(y, l) = max over |Y| <= y of the number of traces of size <= l; y is clamped to n.
///
/// The maximum over |Y| = y alone is not monotone in y (three 2-sets on three
/// points give 3 small traces on a pair but only 1 on the triple), while the
/// packing bound D <= 6 phi(8 d tau, 24 d) evaluates phi on samples of size at
/// most 8 d tau. Sampled mode draws sets of size exactly y.
CountResult shallow_cell(const RangeSpace& space, std::size_t y, std::size_t l,
                         const EnumerationOptions& options = {});
/// Exhaustive only; throws CapExceeded when the enumeration is above max_subsets.
std::size_t shallow_cell_exact(const RangeSpace& space, std::size_t y, std::size_t l,
                               std::uint64_t max_subsets = 5'000'000);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct SauerRow {
  std::size_t y = 0;
  std::size_t pi = 0;
  std::uint64_t binomial_sum = 0;
  long double exponential_bound = 0;
};

struct SauerReport {
  std::size_t d = 0;
  std::vector<SauerRow> rows;  // y = d..n
};

/// Checks pi(y) <= sum_{i<=d} C(y,i) <= (e y / d)^d for y = d..n with exact d and
/// exhaustive pi. Throws TheoremViolation on failure.
SauerReport sauer_check(const RangeSpace& space, const EnumerationOptions& options = {});

// ---------------------------------------------------------------------------
// Alexander's capacity
// ---------------------------------------------------------------------------

/// min(2^i eps, 1)
Rational level_eps(const Rational& eps, int i);

/// 1 + ceil(log2(1/eps))
int dyadic_levels(const Rational& eps);

/// tau(eps) = max{1, sup_{eps0 >= eps} P(union of ranges with P(R) <= eps0) / eps0}.
///
/// The numerator only changes at the values P(R), and between two of them the
/// ratio decreases in eps0, so the supremum is a maximum over eps0 in
/// {eps} ∪ {P(R) : P(R) >= eps}. eps0 is capped at 1: beyond it the union is
/// fixed and the ratio only falls.
Rational alexander_capacity(const RangeSpace& space, const Rational& eps);

struct CapacityVector {
  int z = 0;
  /// tau[i-1] = tau(min(2^i eps, 1)) for i = 1..z
  std::vector<Rational> tau;
};

CapacityVector capacity_vector(const RangeSpace& space, const Rational& eps);

// ---------------------------------------------------------------------------
// Doubling constant
// ---------------------------------------------------------------------------

enum class DoublingMode { exact, bracket, automatic };

struct DoublingOptions {
  DoublingMode mode = DoublingMode::exact;
  /// exact mode refuses families with more ranges than this
  std::size_t cap = 2000;
  std::uint64_t seed = 0;
  /// VC dimension if already known exactly (used by the bracket upper bound)
  std::optional<std::size_t> d;
};

struct DoublingResult {
  bool exact = true;
  /// exact value, or the greedy-packing lower bound
  std::size_t lower = 0;
  /// exact value, or min(|R|, 6 (8 e tau(eps))^d)
  long double upper = 0;
  /// eps0 attaining `lower`
  Rational argmax_eps0;
  /// ranges of a packing attaining `lower`
  std::vector<std::size_t> witness;

  [[nodiscard]] long double value_for_sizing() const { return exact ? static_cast<long double>(lower) : upper; }
};

/// Constant of the bracket upper bound D <= c0 (c tau)^d: c = 8e, c0 = 6. It
/// follows from D <= 6 phi(8 d tau, 24 d) and phi(y, l) <= (e y / d)^d.
inline constexpr long double kDoublingUpperC = 8.0L * 2.718281828459045235360287471352662498L;
inline constexpr long double kDoublingUpperPrefactor = 6.0L;

/// D_eps = sup_{eps0 >= eps} M(R_{<= 2 eps0}, eps0).
///
/// Membership of R_{<= 2 eps0} changes at P(R)/2 and packing feasibility at
/// the pairwise rho values, so eps0 ranges over {eps} ∪ {P(R)/2} ∪ {rho(R1,R2)}
/// intersected with [eps, 1]. Each M is an exact maximum clique of the graph
/// joining ranges at distance >= eps0.
DoublingResult doubling_constant(const RangeSpace& space, const Rational& eps, const DoublingOptions& options = {});

// ---------------------------------------------------------------------------
// Star number
// ---------------------------------------------------------------------------

struct StarNumber {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = true;
  /// points x_1..x_s and, aligned, ranges R_i with R_i ∩ {x} = {x_i}
  std::vector<std::size_t> points;
  std::vector<std::size_t> ranges;
};

/// Largest s with points x_1..x_s and ranges R_1..R_s such that R_i meets
/// {x_1..x_s} exactly in x_i. The property is hereditary, which the exact
/// branch and bound exploits; above `cap` points only a greedy lower bound is
/// returned with upper = min(#covered points, |R|).
StarNumber star_number(const RangeSpace& space, std::size_t cap = 24, std::size_t budget = 64,
                       std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Profile
// ---------------------------------------------------------------------------

struct ShallowCellEntry {
  std::size_t y = 0;
  std::size_t l = 0;
  CountResult value;
};

struct ComplexityProfile {
  Rational eps;
  VcDimension d;
  std::vector<std::pair<std::size_t, CountResult>> pi;
  Rational tau;
  CapacityVector tau_vec;
  DoublingResult doubling;
  std::vector<ShallowCellEntry> phi_hat;
  StarNumber star;
};

struct ProfileOptions {
  std::vector<std::size_t> pi_at;
  std::vector<std::pair<std::size_t, std::size_t>> phi_at;
  VcOptions vc;
  EnumerationOptions enumeration;
  DoublingOptions doubling{DoublingMode::automatic, 2000, 0, std::nullopt};
  std::size_t star_cap = 24;
};

ComplexityProfile compute_profile(const RangeSpace& space, const Rational& eps, const ProfileOptions& options = {});

}  // namespace epsnet
