#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epsnet/errors.hpp"
#include "epsnet/range_space.hpp"
#include "epsnet/rational.hpp"

namespace epsnet {

enum class PackingCertificate { greedy_maximal, exact_maximum };

std::string to_string(PackingCertificate c);

/// Subfamily with pairwise rho >= level, optionally drawn from R_{<= ceiling}.
struct Packing {
  std::string space_name;
  std::vector<std::size_t> members;  // ascending range indices
  Rational level;
  std::optional<Rational> ceiling;
  PackingCertificate certificate = PackingCertificate::greedy_maximal;

  [[nodiscard]] std::size_t size() const { return members.size(); }
};

/// Ranges with P(R) <= ceiling (all ranges when unset).
std::vector<std::size_t> eligible_ranges(const RangeSpace& space, const std::optional<Rational>& ceiling);

/// Maximal packing: eligible ranges in seeded random order, each kept when it is
/// at distance >= level from every range kept so far.
Packing greedy_packing(const RangeSpace& space, const Rational& level, const std::optional<Rational>& ceiling,
                       std::uint64_t seed);
/// Same over an explicit candidate list, processed in the given order (no shuffle).
Packing greedy_packing_in_order(const RangeSpace& space, std::span<const std::size_t> candidates, const Rational& level);

/// Maximum packing via exact maximum clique of the far graph.
Packing max_packing_exact(const RangeSpace& space, const Rational& level, const std::optional<Rational>& ceiling,
                          std::size_t cap = 2000);

struct PackingCheck {
  bool separated = true;
  bool within_ceiling = true;
  /// no eligible non-member is at distance >= level from all members
  bool maximal = true;
  [[nodiscard]] bool ok() const { return separated && within_ceiling && maximal; }
};

/// Independent re-verification of every packing invariant.
PackingCheck verify_packing(const RangeSpace& space, const Packing& packing);

/// e (d+1) (2e / level)^d
long double haussler_bound(std::size_t d, const Rational& level);

struct HausslerReport {
  std::size_t size = 0;
  std::size_t d = 0;
  Rational level;
  long double bound = 0;
  long double margin = 0;
};

/// Checks |members| <= e(d+1)(2e/level)^d with d the exact VC dimension of the
/// member subfamily (computed when not supplied). Throws TheoremViolation.
HausslerReport haussler_certificate(const RangeSpace& space, const Packing& packing,
                                    std::optional<std::size_t> d = std::nullopt);

/// Objective (1/(1-delta)) (2e/(eps delta))^d minimised over delta.
long double haussler_delta_objective(std::size_t d, long double eps, long double delta);

/// (1/(1-delta)) delta^{-d} at delta = d/(d+1), exactly: (d+1)^{d+1} / d^d.
/// Multiplying by (2e/eps)^d gives the objective's minimum; since
/// (1 + 1/d)^d < e this is strictly below e(d+1).
Rational haussler_delta_factor(std::size_t d);

/// Whether delta = d/(d+1) is the stationary point of -ln(1-delta) - d ln(delta),
/// i.e. 1/(1-delta) = d/delta, decided exactly.
bool haussler_delta_is_stationary(std::size_t d);

/// ceil(2d / (eps delta))
std::size_t lemma4_sample_size(std::size_t d, const Rational& eps, const Rational& delta);

struct MonteCarloEstimate {
  double mean = 0;
  double standard_error = 0;
  std::size_t trials = 0;
};

/// Estimate of E|F|_A| for F = the given members and A an i.i.d. sample of
/// `sample_size` points from P. Only the members' own traces are counted.
MonteCarloEstimate projection_count_estimate(const RangeSpace& space, std::span<const std::size_t> members,
                                             std::size_t sample_size, std::size_t trials, std::uint64_t seed);

/// (1/eps ln(1/eps))^d, shape only.
long double dudley_style_bound(std::size_t d, long double eps);

}  // namespace epsnet
