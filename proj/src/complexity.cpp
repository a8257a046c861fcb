#include "epsnet/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "epsnet/clique.hpp"
#include "epsnet/random.hpp"

namespace epsnet {
namespace {

constexpr long double kE = 2.718281828459045235360287471352662498L;

// Calls fn(combination) for every k-subset of {0..n-1} in lexicographic order;
// stops early when fn returns false.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), std::size_t{0});
  while (true) {
    if (!fn(std::span<const std::size_t>(c))) return;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

std::vector<std::size_t> random_subset(std::size_t n, std::size_t y, Rng& rng) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < y; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(y);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::uint64_t trace_mask(const PointSet& range, std::span<const std::size_t> points) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (range.test(points[i])) m |= std::uint64_t{1} << i;
  return m;
}

void check_eps(const Rational& eps) {
  if (!eps.is_positive() || eps > Rational(1)) throw std::invalid_argument("eps must lie in (0, 1], got " + eps.str());
}

// Maximum of count_traces over y-subsets, or over all subsets of size at
// most y when `up_to` is set.
CountResult max_trace_count(const RangeSpace& space, std::size_t y, std::size_t l, bool up_to,
                            const EnumerationOptions& options) {
  const std::size_t n = space.size();
  const auto& family = space.ranges();
  CountResult result;
  std::uint64_t work = 0;
  for (std::size_t k = up_to ? 0 : y; k <= y; ++k) work += binomial(n, k);
  if (work <= options.max_subsets) {
    for (std::size_t k = up_to ? 0 : y; k <= y; ++k) {
      for_each_combination(n, k, [&](std::span<const std::size_t> subset) {
        result.value = std::max(result.value, count_traces(family, subset, l));
        return true;
      });
    }
    return result;
  }
  result.exact = false;
  Rng rng(options.seed);
  for (std::size_t s = 0; s < options.samples; ++s) {
    const auto subset = random_subset(n, y, rng);
    result.value = std::max(result.value, count_traces(family, subset, l));
  }
  return result;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::size_t count_traces(std::span<const PointSet> family, std::span<const std::size_t> points, std::size_t max_size) {
  if (points.size() <= 64) {
    std::vector<std::uint64_t> masks;
    masks.reserve(family.size() + 1);
    masks.push_back(0);
    for (const auto& r : family) {
      const auto m = trace_mask(r, points);
      if (static_cast<std::size_t>(std::popcount(m)) <= max_size) masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    return static_cast<std::size_t>(std::unique(masks.begin(), masks.end()) - masks.begin());
  }
  if (family.empty()) return 1;
  PointSet subset(family.front().capacity(), points);
  std::size_t c = 0;
  for (const auto& t : project(family, subset))
    if (t.count() <= max_size) ++c;
  return c;
}

bool is_shattered(std::span<const PointSet> family, std::span<const std::size_t> points) {
  const std::size_t k = points.size();
  if (k == 0) return true;
  if (k >= 63 || family.size() + 1 < (std::size_t{1} << k)) return false;
  std::vector<char> seen(std::size_t{1} << k, 0);
  seen[0] = 1;
  std::size_t distinct = 1;
  for (const auto& r : family) {
    const auto m = trace_mask(r, points);
    if (!seen[m]) {
      seen[m] = 1;
      if (++distinct == seen.size()) return true;
    }
  }
  return false;
}

VcDimension vc_dimension_exact(std::span<const PointSet> family, std::size_t n, std::size_t cap) {
  // Points outside every range are never shattered, so the search runs over the union.
  std::vector<std::size_t> points;
  if (!family.empty()) {
    PointSet u(family.front().capacity());
    for (const auto& r : family) u |= r;
    points = u.indices();
  }
  if (points.size() > cap)
    throw CapExceeded("exact VC dimension needs at most " + std::to_string(cap) + " covered points, got " +
                      std::to_string(points.size()));
  (void)n;
  VcDimension result;
  using Level = std::vector<std::vector<std::size_t>>;
  Level level{{}};
  while (true) {
    const std::size_t k = level.front().size();
    if (k + 1 >= 63 || family.size() + 1 < (std::size_t{1} << (k + 1))) break;
    std::set<std::vector<std::size_t>> known(level.begin(), level.end());
    Level next;
    // Apriori join: extend each shattered k-set by a larger point and keep the
    // candidate only if every k-subset is already known to be shattered.
    for (const auto& base : level) {
      const auto start = base.empty() ? points.begin() : std::upper_bound(points.begin(), points.end(), base.back());
      for (auto it = start; it != points.end(); ++it) {
        std::vector<std::size_t> cand = base;
        cand.push_back(*it);
        bool hereditary = true;
        for (std::size_t drop = 0; hereditary && drop + 1 < cand.size(); ++drop) {
          std::vector<std::size_t> sub;
          sub.reserve(k);
          for (std::size_t j = 0; j < cand.size(); ++j)
            if (j != drop) sub.push_back(cand[j]);
          hereditary = known.count(sub) != 0;
        }
        if (hereditary && is_shattered(family, cand)) next.push_back(std::move(cand));
      }
    }
    if (next.empty()) break;
    level = std::move(next);
  }
  result.d = level.front().size();
  result.witness = level.front();
  return result;
}

VcDimension vc_dimension_lower_bound(std::span<const PointSet> family, std::size_t n, std::size_t budget,
                                     std::uint64_t seed) {
  VcDimension best;
  best.exact = false;
  std::vector<std::size_t> order(n);
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(budget, 1); ++attempt) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (attempt > 0) {
      Rng rng = Rng::stream(seed, attempt);
      rng.shuffle(order);
    }
    std::vector<std::size_t> y;
    for (auto p : order) {
      y.push_back(p);
      std::vector<std::size_t> sorted = y;
      std::sort(sorted.begin(), sorted.end());
      if (!is_shattered(family, sorted)) y.pop_back();
    }
    if (y.size() > best.d || attempt == 0) {
      std::sort(y.begin(), y.end());
      best.d = y.size();
      best.witness = y;
    }
  }
  return best;
}

VcDimension vc_dimension(const RangeSpace& space, bool exact, const VcOptions& options) {
  if (exact && space.size() > options.cap)
    throw CapExceeded("exact VC dimension needs n <= " + std::to_string(options.cap) + ", got n = " +
                      std::to_string(space.size()));
  if (exact) return vc_dimension_exact(space.ranges(), space.size(), options.cap);
  return vc_dimension_lower_bound(space.ranges(), space.size(), options.budget, options.seed);
}

CountResult projection_function(const RangeSpace& space, std::size_t y, const EnumerationOptions& options) {
  if (y > space.size()) throw std::invalid_argument("projection size exceeds ground set");
  return max_trace_count(space, y, static_cast<std::size_t>(-1), false, options);
}

CountResult shallow_cell(const RangeSpace& space, std::size_t y, std::size_t l, const EnumerationOptions& options) {
  return max_trace_count(space, std::min(y, space.size()), l, true, options);
}

std::size_t shallow_cell_exact(const RangeSpace& space, std::size_t y, std::size_t l, std::uint64_t max_subsets) {
  y = std::min(y, space.size());
  EnumerationOptions options;
  options.max_subsets = max_subsets;
  const CountResult r = max_trace_count(space, y, l, true, options);
  if (!r.exact) throw CapExceeded("exact shallow-cell enumeration above cap");
  return r.value;
}

SauerReport sauer_check(const RangeSpace& space, const EnumerationOptions& options) {
  SauerReport report;
  report.d = vc_dimension_exact(space.ranges(), space.size(), std::max<std::size_t>(space.size(), 24)).d;
  const std::size_t d = report.d;
  for (std::size_t y = d; y <= space.size(); ++y) {
    const CountResult pi = projection_function(space, y, options);
    if (!pi.exact) throw CapExceeded("Sauer check needs exhaustive projection counts");
    SauerRow row;
    row.y = y;
    row.pi = pi.value;
    for (std::size_t i = 0; i <= d; ++i) row.binomial_sum += binomial(y, i);
    row.exponential_bound =
        d == 0 ? 1.0L : std::pow(kE * static_cast<long double>(y) / static_cast<long double>(d), static_cast<long double>(d));
    if (row.pi > row.binomial_sum)
      throw TheoremViolation("pi(" + std::to_string(y) + ") = " + std::to_string(row.pi) + " exceeds binomial sum " +
                             std::to_string(row.binomial_sum));
    if (static_cast<long double>(row.binomial_sum) > row.exponential_bound * (1.0L + 1e-15L))
      throw TheoremViolation("binomial sum exceeds (ey/d)^d at y = " + std::to_string(y));
    report.rows.push_back(row);
  }
  return report;
}

Rational level_eps(const Rational& eps, int i) {
  check_eps(eps);
  Rational r = eps;
  for (int j = 0; j < i; ++j) {
    if (r >= Rational(1, 2)) return Rational(1);
    r = r * Rational(2);
  }
  return r;
}

int dyadic_levels(const Rational& eps) {
  check_eps(eps);
  return 1 + ceil_log2_inverse(eps);
}

Rational alexander_capacity(const RangeSpace& space, const Rational& eps) {
  check_eps(eps);
  const std::int64_t total = space.total_weight();
  const auto& family = space.ranges();

  std::vector<std::pair<std::int64_t, std::size_t>> by_weight;
  by_weight.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) by_weight.emplace_back(space.weight_of(family[i]), i);
  std::sort(by_weight.begin(), by_weight.end());

  std::vector<Rational> candidates{eps};
  for (const auto& [w, i] : by_weight) {
    Rational p(w, total);
    if (p >= eps && p != candidates.back()) candidates.push_back(p);
  }

  Rational best(1);
  PointSet covered = space.empty_set();
  std::size_t next = 0;
  for (const auto& c : candidates) {
    while (next < by_weight.size() && Rational(by_weight[next].first, total) <= c) {
      covered |= family[by_weight[next].second];
      ++next;
    }
    const Rational ratio = space.measure_of(covered) / c;
    if (ratio > best) best = ratio;
  }
  return best;
}

CapacityVector capacity_vector(const RangeSpace& space, const Rational& eps) {
  CapacityVector v;
  v.z = dyadic_levels(eps);
  for (int i = 1; i <= v.z; ++i) v.tau.push_back(alexander_capacity(space, level_eps(eps, i)));
  return v;
}

DoublingResult doubling_constant(const RangeSpace& space, const Rational& eps, const DoublingOptions& options) {
  check_eps(eps);
  const auto& family = space.ranges();
  const std::size_t r = family.size();
  const std::int64_t total = space.total_weight();

  DoublingMode mode = options.mode;
  if (mode == DoublingMode::automatic) mode = r <= options.cap ? DoublingMode::exact : DoublingMode::bracket;
  if (mode == DoublingMode::exact && r > options.cap)
    throw CapExceeded("exact doubling constant needs at most " + std::to_string(options.cap) + " ranges, got " +
                      std::to_string(r));

  DoublingResult result;
  result.exact = mode == DoublingMode::exact;
  result.argmax_eps0 = eps;
  if (r == 0) return result;

  std::vector<std::int64_t> weight(r);
  for (std::size_t i = 0; i < r; ++i) weight[i] = space.weight_of(family[i]);

  // On each interval where the eligible family R_{<=2 eps0} is constant the
  // packing number is non-increasing in eps0, so only the left endpoints
  // {eps} ∪ {P(R)/2 >= eps} need to be examined; the pairwise rho breakpoints
  // inside an interval can never beat its left endpoint.
  std::vector<Rational> candidates{eps};
  for (std::size_t i = 0; i < r; ++i) {
    Rational half(weight[i], 2 * total);
    if (half >= eps) candidates.push_back(half);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<std::size_t> by_weight(r);
  std::iota(by_weight.begin(), by_weight.end(), std::size_t{0});
  std::stable_sort(by_weight.begin(), by_weight.end(), [&](std::size_t a, std::size_t b) { return weight[a] < weight[b]; });

  if (!result.exact && candidates.size() > 256) {
    std::vector<Rational> thinned;
    for (std::size_t j = 0; j < 256; ++j) thinned.push_back(candidates[j * (candidates.size() - 1) / 255]);
    thinned.erase(std::unique(thinned.begin(), thinned.end()), thinned.end());
    candidates = std::move(thinned);
  }

  Rng rng(options.seed);
  for (const auto& c : candidates) {
    // Eligible: w <= 2 c W. Candidates ascend, so the eligible list is a prefix of by_weight.
    std::vector<std::size_t> eligible;
    for (auto i : by_weight) {
      if (static_cast<__int128>(weight[i]) * c.den() > static_cast<__int128>(2) * c.num() * total) break;
      eligible.push_back(i);
    }
    if (eligible.size() <= result.lower) continue;
    const std::size_t m = eligible.size();
    std::vector<PointSet> adjacency(m, PointSet(m));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        const std::int64_t w = rho_weight(space, family[eligible[a]], family[eligible[b]]);
        if (static_cast<__int128>(w) * c.den() >= static_cast<__int128>(c.num()) * total) {
          adjacency[a].set(b);
          adjacency[b].set(a);
        }
      }
    }
    std::vector<std::size_t> clique;
    if (result.exact) {
      clique = max_clique(adjacency);
    } else {
      std::vector<std::size_t> order(m);
      std::iota(order.begin(), order.end(), std::size_t{0});
      rng.shuffle(order);
      clique = greedy_clique(adjacency, order);
    }
    if (clique.size() > result.lower) {
      result.lower = clique.size();
      result.argmax_eps0 = c;
      result.witness.clear();
      for (auto v : clique) result.witness.push_back(eligible[v]);
      std::sort(result.witness.begin(), result.witness.end());
    }
  }

  if (result.exact) {
    result.upper = static_cast<long double>(result.lower);
  } else {
    result.upper = static_cast<long double>(r);
    std::optional<std::size_t> d = options.d;
    if (!d && space.size() <= 24) d = vc_dimension_exact(family, space.size()).d;
    if (d) {
      const long double tau = alexander_capacity(space, eps).to_long_double();
      const long double bound =
          kDoublingUpperPrefactor * std::pow(kDoublingUpperC * tau, static_cast<long double>(*d));
      result.upper = std::min(result.upper, bound);
    }
    result.upper = std::max(result.upper, static_cast<long double>(result.lower));
  }
  return result;
}

namespace {

class StarSearch {
 public:
  explicit StarSearch(const RangeSpace& space) : r_(space.range_count()) {
    const std::size_t n = space.size();
    contains_.assign(n, PointSet(r_));
    for (std::size_t j = 0; j < r_; ++j) space.range(j).for_each([&](std::size_t p) { contains_[p].set(j); });
    for (std::size_t p = 0; p < n; ++p)
      if (!contains_[p].empty()) covered_.push_back(p);
  }

  [[nodiscard]] const std::vector<std::size_t>& covered() const { return covered_; }

  // State of a partial star: chosen points, for each a set of witness ranges,
  // and the ranges avoiding every chosen point.
  struct State {
    std::vector<std::size_t> points;
    std::vector<PointSet> witnesses;
    PointSet avoid;
  };

  State initial() const { return State{{}, {}, PointSet::full(r_)}; }

  std::optional<State> extend(const State& s, std::size_t p) const {
    State t;
    t.points = s.points;
    t.points.push_back(p);
    t.witnesses.reserve(t.points.size());
    for (const auto& w : s.witnesses) {
      PointSet narrowed = w;
      narrowed.subtract(contains_[p]);
      if (narrowed.empty()) return std::nullopt;
      t.witnesses.push_back(std::move(narrowed));
    }
    PointSet own = contains_[p] & s.avoid;
    if (own.empty()) return std::nullopt;
    t.witnesses.push_back(std::move(own));
    t.avoid = s.avoid;
    t.avoid.subtract(contains_[p]);
    return t;
  }

  State greedy(const std::vector<std::size_t>& order) const {
    State s = initial();
    for (auto p : order)
      if (auto t = extend(s, p)) s = std::move(*t);
    return s;
  }

  void search(const State& s, const std::vector<std::size_t>& candidates, State& best) const {
    if (s.points.size() > best.points.size()) best = s;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (s.points.size() + (candidates.size() - i) <= best.points.size()) return;
      auto t = extend(s, candidates[i]);
      if (!t) continue;
      std::vector<std::size_t> rest;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (extend(*t, candidates[j])) rest.push_back(candidates[j]);
      search(*t, rest, best);
    }
  }

 private:
  std::size_t r_;
  std::vector<PointSet> contains_;
  std::vector<std::size_t> covered_;
};

}  // namespace

StarNumber star_number(const RangeSpace& space, std::size_t cap, std::size_t budget, std::uint64_t seed) {
  StarSearch search(space);
  const auto& covered = search.covered();

  StarSearch::State best = search.greedy(covered);
  std::vector<std::size_t> order = covered;
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Rng rng = Rng::stream(seed, attempt);
    rng.shuffle(order);
    auto s = search.greedy(order);
    if (s.points.size() > best.points.size()) best = std::move(s);
  }

  StarNumber result;
  result.exact = space.size() <= cap;
  if (result.exact) search.search(search.initial(), covered, best);

  std::vector<std::size_t> idx(best.points.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return best.points[a] < best.points[b]; });
  for (auto i : idx) {
    result.points.push_back(best.points[i]);
    result.ranges.push_back(best.witnesses[i].first());
  }
  result.lower = result.points.size();
  result.upper = result.exact ? result.lower : std::min(covered.size(), space.range_count());
  return result;
}

ComplexityProfile compute_profile(const RangeSpace& space, const Rational& eps, const ProfileOptions& options) {
  ComplexityProfile p;
  p.eps = eps;
  p.d = vc_dimension(space, space.size() <= options.vc.cap, options.vc);
  for (auto y : options.pi_at) p.pi.emplace_back(y, projection_function(space, std::min(y, space.size()), options.enumeration));
  p.tau = alexander_capacity(space, eps);
  p.tau_vec = capacity_vector(space, eps);
  DoublingOptions dopt = options.doubling;
  if (p.d.exact && !dopt.d) dopt.d = p.d.d;
  p.doubling = doubling_constant(space, eps, dopt);
  for (const auto& [y, l] : options.phi_at) p.phi_hat.push_back({y, l, shallow_cell(space, y, l, options.enumeration)});
  p.star = star_number(space, options.star_cap);
  return p;
}

}  // namespace epsnet
