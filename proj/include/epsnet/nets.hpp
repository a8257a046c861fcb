#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epsnet/complexity.hpp"
#include "epsnet/errors.hpp"
#include "epsnet/range_space.hpp"
#include "epsnet/rational.hpp"

namespace epsnet {

enum class NetMethod { given, iid, stratified, doubling, doubling_small, cal, greedy, exact };

std::string to_string(NetMethod m);
/// Accepts the names produced by to_string; nullopt otherwise.
std::optional<NetMethod> parse_net_method(std::string_view text);

enum class IidSizing { vc, capacity };

std::string to_string(IidSizing s);

/// Per-bucket accounting of the stratified and doubling constructions.
struct LevelStats {
  int level = 0;
  std::size_t ranges = 0;
  /// packing members (doubling constructions only)
  std::size_t packing = 0;
  /// final sample size drawn for this bucket
  std::size_t sample = 0;
  std::size_t retries = 0;
  /// points added by greedy repair
  std::size_t repaired = 0;
  /// distinct points this bucket contributed
  std::size_t points = 0;
};

struct NetStats {
  std::uint64_t seed = 0;
  /// i.i.d. points drawn from P or a conditional of P
  std::size_t draws = 0;
  /// CAL: labels requested (points kept)
  std::size_t queries = 0;
  std::vector<LevelStats> levels;
  std::size_t retries = 0;
  /// buckets or packing neighborhoods that needed greedy repair
  std::size_t repairs = 0;
  /// VC dimension used for sizing, and whether it is exact
  std::optional<std::size_t> d;
  bool d_exact = true;
  /// doubling constant used for sizing
  std::optional<long double> doubling;
  /// small-D construction fell back to doubling_net (D > 1/(2 eps))
  bool fallback = false;
  /// CAL: ranges never hit, ascending
  std::vector<std::size_t> surviving;
  /// CAL: the loop ended because no surviving range was left
  bool family_exhausted = false;
};

struct NetReport {
  NetMethod method = NetMethod::given;
  PointSet candidate;
  Rational eps;
  bool is_net = false;
  /// ranges with P(R) >= eps missed by the candidate, ascending
  std::vector<std::size_t> violations;
  NetStats stats;

  [[nodiscard]] std::size_t size() const { return candidate.count(); }
};

/// Checks R ∩ candidate != ∅ for every range with P(R) >= eps. Throws
/// RangeSpaceError when the candidate contains a zero-weight point.
NetReport verify_net(const RangeSpace& space, const PointSet& candidate, const Rational& eps);
NetReport verify_net(const RangeSpace& space, std::span<const std::size_t> candidate, const Rational& eps);

/// Ranges with P(R) >= eps.
std::vector<std::size_t> qualifying_ranges(const RangeSpace& space, const Rational& eps);

/// VC dimension used to size samples: exact when the family covers at most 24
/// points, otherwise a lower bound from randomized search.
VcDimension sizing_dimension(const RangeSpace& space);

/// ceil(C (d ln(1/eps) + ln(1/delta)) / eps) for vc sizing,
/// ceil(C (d ln tau + ln(1/delta)) / eps) for capacity sizing; at least 1.
std::size_t iid_sample_size(IidSizing sizing, std::size_t d, const Rational& eps, const Rational& delta, double C,
                            const Rational& tau = Rational(1));

NetReport iid_net(const RangeSpace& space, const Rational& eps, const Rational& delta, IidSizing sizing, double C,
                  std::uint64_t seed, std::optional<std::size_t> d = std::nullopt);

struct DyadicLevel {
  int i = 0;
  /// eps_{i-1} (0 for i = 0) and eps_i = min(2^i eps, 1)
  Rational lower;
  Rational upper;
  /// R_i: lower <= P(R) < upper; the top level also takes P(R) = 1
  std::vector<std::size_t> ranges;
  /// X^(i), the union of R_i
  PointSet support;
  Rational support_measure;
  /// tau(eps_i)
  Rational tau;
  /// max(ln(D / tau_i), ln 2), set when D is supplied
  long double t = 0;
};

struct DyadicDecomposition {
  Rational eps;
  int z = 0;
  std::vector<DyadicLevel> levels;  // i = 0..z
};

DyadicDecomposition dyadic_decomposition(const RangeSpace& space, const Rational& eps,
                                         std::optional<long double> doubling = std::nullopt);

/// For i >= 1 and R in R_i: 2 tau_i P(R) >= P(X^(i)). Throws TheoremViolation.
void check_bucket_inequality(const DyadicDecomposition& decomposition, const RangeSpace& space);

/// Per bucket, an i.i.d. sample from P(.|X^(i)) sized for a 1/(2 tau_i)-net
/// with confidence 1/2, doubled on failure up to max_retries times, then
/// completed greedily.
NetReport stratified_net(const RangeSpace& space, const Rational& eps, double C, std::uint64_t seed,
                         std::size_t max_retries = 8, std::optional<std::size_t> d = std::nullopt);

/// Neighborhood R_i(Q) = {R in bucket : 4 P(R ∩ Q) >= P(Q)}.
std::vector<std::size_t> packing_neighborhood(const RangeSpace& space, std::span<const std::size_t> bucket,
                                              std::size_t q);

/// Per level i >= 1: a greedy maximal eps_{i-1}-packing of R_i, a sample of
/// ceil(C (t_i + d) tau_{i-1}) points from P(.|X^(i)), and a greedy 1/4-net for
/// every neighborhood R_i(Q) the sample misses under P(.|Q).
NetReport doubling_net(const RangeSpace& space, const Rational& eps, double C, std::uint64_t seed,
                       std::optional<std::size_t> d = std::nullopt,
                       std::optional<DoublingResult> doubling = std::nullopt);

/// Levels 1..i0 with i0 = ceil(log2(e / (D eps))) get greedy 1/4-nets for every
/// packing neighborhood; ranges with P(R) >= eps_{i0} go to doubling_net at
/// eps_{i0}. Falls back to doubling_net when D > 1/(2 eps).
NetReport doubling_net_small_d(const RangeSpace& space, const Rational& eps, double C, std::uint64_t seed,
                               std::optional<std::size_t> d = std::nullopt,
                               std::optional<DoublingResult> doubling = std::nullopt);

/// CAL: draw x_m from P and keep it when it lies in a range not yet hit, while
/// t < budget and m < 2^budget (and m < draw_cap). Stops early once every range
/// is hit, since no later draw can be kept.
NetReport cal_net(const RangeSpace& space, const Rational& eps, std::size_t budget, std::uint64_t seed,
                  std::size_t draw_cap = 1'000'000);

/// Points of `allowed` chosen greedily until every target is hit: each step
/// takes the point in the most unhit targets, lowest index on ties. Targets
/// disjoint from `allowed` are ignored.
std::vector<std::size_t> greedy_hitting_set(std::span<const PointSet> targets, const PointSet& allowed);

NetReport greedy_net(const RangeSpace& space, const Rational& eps);

/// Minimum net by branch and bound over independent components: branch on the
/// smallest unhit target, prune with the greedy upper bound and a count of
/// pairwise disjoint unhit targets. Throws CapExceeded when the qualifying
/// ranges or the support exceed cap.
NetReport min_net_exact(const RangeSpace& space, const Rational& eps, std::size_t cap = 2000);

/// max(d, 1) sum_{i=1..z} tau_i ln(tau_i + 1)
long double bound_stratified(std::size_t d, const CapacityVector& tau);
/// max(d, 1) tau ln(tau + 1) z
long double bound_capacity(std::size_t d, const Rational& tau, int z);
/// sum_{i=1..z} (max(ln(D / tau_i), ln 2) + d) tau_i
long double bound_doubling(std::size_t d, long double doubling, const CapacityVector& tau);
/// max(d, 1) D max(log2(1 / (eps D)), 1)
long double bound_doubling_small(std::size_t d, long double doubling, const Rational& eps);

}  // namespace epsnet
