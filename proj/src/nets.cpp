#include "epsnet/nets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "epsnet/packing.hpp"
#include "epsnet/parallel.hpp"
#include "epsnet/random.hpp"

namespace epsnet {
namespace {

constexpr long double kE = 2.718281828459045235360287471352662498L;
// per-bucket confidence of the stratified samples
constexpr long double kBucketDelta = 0.5L;

void check_eps(const Rational& eps) {
  if (!eps.is_positive() || eps > Rational(1)) throw std::invalid_argument("eps must lie in (0, 1]");
}

void check_constant(double C) {
  if (!(C > 0) || !std::isfinite(C)) throw std::invalid_argument("the constant C must be positive");
}

std::size_t ceil_size(long double x) {
  if (!(x >= 1)) return 1;
  if (x > 1e12L) throw std::invalid_argument("sample size out of range");
  return static_cast<std::size_t>(std::ceil(x));
}

// w(a) >= level * w(b), decided on integers.
bool weight_at_least_fraction(std::int64_t a, std::int64_t b, const Rational& level) {
  return static_cast<__int128>(a) * level.den() >= static_cast<__int128>(level.num()) * b;
}

std::vector<std::int64_t> masked_weights(const RangeSpace& space, const PointSet& mask) {
  std::vector<std::int64_t> w(space.size(), 0);
  mask.for_each([&](std::size_t x) { w[x] = space.weights()[x]; });
  return w;
}

PointSet draw_points(const WeightedSampler& sampler, std::size_t count, std::size_t n, Rng& rng) {
  PointSet s(n);
  for (std::size_t k = 0; k < count; ++k) s.set(sampler.draw(rng));
  return s;
}

NetReport finish(const RangeSpace& space, NetMethod method, const PointSet& candidate, const Rational& eps,
                 NetStats stats) {
  NetReport r = verify_net(space, candidate, eps);
  r.method = method;
  r.stats = std::move(stats);
  return r;
}

std::vector<DyadicLevel> nonempty_levels(const DyadicDecomposition& dec, int from, int to) {
  std::vector<DyadicLevel> out;
  for (const auto& level : dec.levels)
    if (level.i >= from && level.i <= to && !level.ranges.empty()) out.push_back(level);
  return out;
}

std::optional<DoublingResult> resolve_doubling(const RangeSpace& space, const Rational& eps, const VcDimension& d,
                                               std::optional<DoublingResult> given, std::uint64_t seed) {
  if (given) return given;
  DoublingOptions opts{DoublingMode::automatic, 2000, seed, std::nullopt};
  if (d.exact) opts.d = d.d;
  return doubling_constant(space, eps, opts);
}

// For each member Q of a greedy maximal packing of the bucket, the ranges of
// R_i(Q) missed by `sample` inside Q are hit greedily. Every bucket range must
// fall in some R_i(Q).
void cover_neighborhoods(const RangeSpace& space, const DyadicLevel& level, std::uint64_t seed, PointSet& net,
                         const PointSet* sample, LevelStats& ls, NetStats& stats) {
  std::vector<std::size_t> order = level.ranges;
  Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(2 * level.i));
  rng.shuffle(order);
  const Packing packing = greedy_packing_in_order(space, order, level.lower);
  ls.packing = packing.size();

  PointSet covered(level.ranges.size());
  for (auto q : packing.members) {
    const PointSet& qset = space.range(q);
    const auto hood = packing_neighborhood(space, level.ranges, q);
    std::vector<PointSet> missed;
    for (auto r : hood) {
      covered.set(static_cast<std::size_t>(
          std::lower_bound(level.ranges.begin(), level.ranges.end(), r) - level.ranges.begin()));
      PointSet target = space.range(r) & qset;
      if (sample && target.intersects(*sample)) continue;
      missed.push_back(std::move(target));
    }
    if (missed.empty()) continue;
    const auto added = greedy_hitting_set(missed, qset & space.support());
    for (auto x : added)
      if (!net.test(x)) {
        net.set(x);
        ++ls.repaired;
      }
    if (sample) ++stats.repairs;
  }
  if (covered.count() != level.ranges.size())
    throw TheoremViolation("a range of level " + std::to_string(level.i) +
                           " has no packing member Q with P(R ∩ Q) >= P(Q)/4");
}

}  // namespace

std::string to_string(NetMethod m) {
  switch (m) {
    case NetMethod::given: return "given";
    case NetMethod::iid: return "iid";
    case NetMethod::stratified: return "stratified";
    case NetMethod::doubling: return "doubling";
    case NetMethod::doubling_small: return "doubling-small";
    case NetMethod::cal: return "cal";
    case NetMethod::greedy: return "greedy";
    case NetMethod::exact: return "exact";
  }
  return "unknown";
}

std::optional<NetMethod> parse_net_method(std::string_view text) {
  for (auto m : {NetMethod::given, NetMethod::iid, NetMethod::stratified, NetMethod::doubling,
                 NetMethod::doubling_small, NetMethod::cal, NetMethod::greedy, NetMethod::exact})
    if (to_string(m) == text) return m;
  return std::nullopt;
}

std::string to_string(IidSizing s) { return s == IidSizing::vc ? "vc" : "capacity"; }

std::vector<std::size_t> qualifying_ranges(const RangeSpace& space, const Rational& eps) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space.range_count(); ++i)
    if (space.measure_at_least(space.range(i), eps)) out.push_back(i);
  return out;
}

NetReport verify_net(const RangeSpace& space, const PointSet& candidate, const Rational& eps) {
  if (!eps.is_positive()) throw std::invalid_argument("eps must be positive");
  if (candidate.capacity() != space.size())
    throw RangeSpaceError("candidate is over a ground set of a different size");
  if (!candidate.is_subset_of(space.support()))
    throw RangeSpaceError("candidate contains a zero-weight point");
  NetReport r;
  r.candidate = candidate;
  r.eps = eps;
  const std::size_t m = space.range_count();
  std::vector<char> missed(m, 0);
  constexpr std::size_t kChunk = 1024;
  parallel_for((m + kChunk - 1) / kChunk, [&](std::size_t c) {
    for (std::size_t i = c * kChunk; i < std::min(m, (c + 1) * kChunk); ++i) {
      const auto& range = space.range(i);
      if (!range.intersects(candidate) && space.measure_at_least(range, eps)) missed[i] = 1;
    }
  });
  for (std::size_t i = 0; i < m; ++i)
    if (missed[i]) r.violations.push_back(i);
  r.is_net = r.violations.empty();
  return r;
}

NetReport verify_net(const RangeSpace& space, std::span<const std::size_t> candidate, const Rational& eps) {
  for (auto x : candidate)
    if (x >= space.size()) throw RangeSpaceError("candidate point " + std::to_string(x) + " outside the ground set");
  return verify_net(space, PointSet(space.size(), candidate), eps);
}

VcDimension sizing_dimension(const RangeSpace& space) {
  try {
    return vc_dimension_exact(space.ranges(), space.size());
  } catch (const CapExceeded&) {
    return vc_dimension_lower_bound(space.ranges(), space.size(), 256, 0);
  }
}

std::size_t iid_sample_size(IidSizing sizing, std::size_t d, const Rational& eps, const Rational& delta, double C,
                            const Rational& tau) {
  check_eps(eps);
  check_eps(delta);
  check_constant(C);
  const long double e = eps.to_long_double();
  const long double log_term =
      sizing == IidSizing::vc ? std::log(1 / e) : std::log(tau.to_long_double());
  const long double m = static_cast<long double>(C) *
                        (static_cast<long double>(d) * log_term + std::log(1 / delta.to_long_double())) / e;
  return ceil_size(m);
}

NetReport iid_net(const RangeSpace& space, const Rational& eps, const Rational& delta, IidSizing sizing, double C,
                  std::uint64_t seed, std::optional<std::size_t> d) {
  check_eps(eps);
  NetStats stats;
  stats.seed = seed;
  if (d) {
    stats.d = d;
  } else {
    const auto vc = sizing_dimension(space);
    stats.d = vc.d;
    stats.d_exact = vc.exact;
  }
  const Rational tau = sizing == IidSizing::capacity ? alexander_capacity(space, eps) : Rational(1);
  const std::size_t m = iid_sample_size(sizing, *stats.d, eps, delta, C, tau);
  PointSet net = space.empty_set();
  if (space.total_weight() > 0) {
    const WeightedSampler sampler(space.weights());
    Rng rng(seed);
    net = draw_points(sampler, m, space.size(), rng);
    stats.draws = m;
  }
  LevelStats ls;
  ls.sample = m;
  ls.points = net.count();
  stats.levels.push_back(ls);
  return finish(space, NetMethod::iid, net, eps, std::move(stats));
}

DyadicDecomposition dyadic_decomposition(const RangeSpace& space, const Rational& eps,
                                         std::optional<long double> doubling) {
  check_eps(eps);
  DyadicDecomposition dec;
  dec.eps = eps;
  dec.z = dyadic_levels(eps);
  for (int i = 0; i <= dec.z; ++i) {
    DyadicLevel level;
    level.i = i;
    level.lower = i == 0 ? Rational(0) : level_eps(eps, i - 1);
    level.upper = level_eps(eps, i);
    level.support = space.empty_set();
    level.tau = alexander_capacity(space, level.upper);
    if (doubling)
      level.t = std::max(std::log(*doubling / level.tau.to_long_double()), std::log(2.0L));
    dec.levels.push_back(std::move(level));
  }
  for (std::size_t r = 0; r < space.range_count(); ++r) {
    const Rational p = measure(space, r);
    int i = 0;
    while (i < dec.z && p >= dec.levels[i].upper) ++i;
    dec.levels[i].ranges.push_back(r);
    dec.levels[i].support |= space.range(r);
  }
  for (auto& level : dec.levels) level.support_measure = space.measure_of(level.support);
  return dec;
}

void check_bucket_inequality(const DyadicDecomposition& dec, const RangeSpace& space) {
  for (const auto& level : dec.levels) {
    if (level.i == 0) continue;
    const std::int64_t wx = space.weight_of(level.support);
    const Rational half(level.tau.den(), 2 * level.tau.num());  // 1 / (2 tau_i)
    for (auto r : level.ranges)
      if (!weight_at_least_fraction(space.weight_of(space.range(r)), wx, half))
        throw TheoremViolation("P(R|X^(" + std::to_string(level.i) + ")) < 1/(2 tau_i) for range " +
                               std::to_string(r));
  }
}

NetReport stratified_net(const RangeSpace& space, const Rational& eps, double C, std::uint64_t seed,
                         std::size_t max_retries, std::optional<std::size_t> d) {
  check_eps(eps);
  check_constant(C);
  NetStats stats;
  stats.seed = seed;
  if (d) {
    stats.d = d;
  } else {
    const auto vc = sizing_dimension(space);
    stats.d = vc.d;
    stats.d_exact = vc.exact;
  }
  const auto dec = dyadic_decomposition(space, eps);
  check_bucket_inequality(dec, space);

  PointSet net = space.empty_set();
  for (const auto& level : nonempty_levels(dec, 0, dec.z)) {
    LevelStats ls;
    ls.level = level.i;
    ls.ranges = level.ranges.size();
    const std::int64_t wx = space.weight_of(level.support);
    if (wx == 0) {
      stats.levels.push_back(ls);
      continue;
    }
    const Rational lambda(level.tau.den(), 2 * level.tau.num());
    std::vector<PointSet> targets;
    for (auto r : level.ranges) {
      PointSet t = space.range(r) & level.support;
      if (weight_at_least_fraction(space.weight_of(t), wx, lambda)) targets.push_back(std::move(t));
    }
    const long double lam = lambda.to_long_double();
    const std::size_t base = ceil_size(static_cast<long double>(C) *
                                       (static_cast<long double>(*stats.d) * std::log(1 / lam) +
                                        std::log(1 / kBucketDelta)) /
                                       lam);
    const WeightedSampler sampler(masked_weights(space, level.support));
    PointSet sample = space.empty_set();
    std::vector<PointSet> missed;
    for (std::size_t attempt = 0;; ++attempt) {
      const std::size_t m = base << std::min<std::size_t>(attempt, 40);
      Rng rng = Rng::stream(seed, (static_cast<std::uint64_t>(level.i) << 8) | attempt);
      sample = draw_points(sampler, m, space.size(), rng);
      stats.draws += m;
      ls.sample = m;
      missed.clear();
      for (const auto& t : targets)
        if (!t.intersects(sample)) missed.push_back(t);
      if (missed.empty() || attempt == max_retries) break;
      ++ls.retries;
      ++stats.retries;
    }
    if (!missed.empty()) {
      for (auto x : greedy_hitting_set(missed, level.support & space.support())) {
        sample.set(x);
        ++ls.repaired;
      }
      ++stats.repairs;
    }
    ls.points = sample.count_minus(net);
    net |= sample;
    stats.levels.push_back(ls);
  }
  return finish(space, NetMethod::stratified, net, eps, std::move(stats));
}

std::vector<std::size_t> packing_neighborhood(const RangeSpace& space, std::span<const std::size_t> bucket,
                                              std::size_t q) {
  const PointSet& qset = space.range(q);
  const std::int64_t wq = space.weight_of(qset);
  std::vector<std::size_t> out;
  for (auto r : bucket)
    if (4 * space.weight_of(space.range(r) & qset) >= wq) out.push_back(r);
  return out;
}

NetReport doubling_net(const RangeSpace& space, const Rational& eps, double C, std::uint64_t seed,
                       std::optional<std::size_t> d, std::optional<DoublingResult> doubling) {
  check_eps(eps);
  check_constant(C);
  NetStats stats;
  stats.seed = seed;
  VcDimension vc;
  if (d) {
    vc.d = *d;
  } else {
    vc = sizing_dimension(space);
    stats.d_exact = vc.exact;
  }
  stats.d = vc.d;
  const auto dres = resolve_doubling(space, eps, vc, doubling, seed);
  stats.doubling = dres->value_for_sizing();
  const auto dec = dyadic_decomposition(space, eps, std::max(*stats.doubling, 1.0L));

  PointSet net = space.empty_set();
  for (const auto& level : nonempty_levels(dec, 1, dec.z)) {
    LevelStats ls;
    ls.level = level.i;
    ls.ranges = level.ranges.size();
    const long double tau_prev = dec.levels[level.i - 1].tau.to_long_double();
    const std::size_t m =
        ceil_size(static_cast<long double>(C) * (level.t + static_cast<long double>(vc.d)) * tau_prev);
    const WeightedSampler sampler(masked_weights(space, level.support));
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(2 * level.i + 1));
    const PointSet sample = draw_points(sampler, m, space.size(), rng);
    stats.draws += m;
    ls.sample = m;
    const std::size_t before = net.count();
    net |= sample;
    cover_neighborhoods(space, level, seed, net, &sample, ls, stats);
    ls.points = net.count() - before;
    stats.levels.push_back(ls);
  }
  return finish(space, NetMethod::doubling, net, eps, std::move(stats));
}

NetReport doubling_net_small_d(const RangeSpace& space, const Rational& eps, double C, std::uint64_t seed,
                               std::optional<std::size_t> d, std::optional<DoublingResult> doubling) {
  check_eps(eps);
  check_constant(C);
  VcDimension vc;
  if (d) {
    vc.d = *d;
  } else {
    vc = sizing_dimension(space);
  }
  const auto dres = resolve_doubling(space, eps, vc, doubling, seed);
  const long double D = dres->value_for_sizing();
  if (D * 2 * eps.to_long_double() > 1) {
    NetReport r = doubling_net(space, eps, C, seed, vc.d, dres);
    r.method = NetMethod::doubling_small;
    r.stats.fallback = true;
    r.stats.d_exact = vc.exact;
    return r;
  }

  NetStats stats;
  stats.seed = seed;
  stats.d = vc.d;
  stats.d_exact = vc.exact;
  stats.doubling = D;
  const auto dec = dyadic_decomposition(space, eps, std::max(D, 1.0L));
  int i0 = dec.z;
  if (D >= 1) {
    const long double x = std::ceil(std::log2(kE / (D * eps.to_long_double())));
    i0 = static_cast<int>(std::clamp<long double>(x, 1, dec.z));
  }

  PointSet net = space.empty_set();
  for (const auto& level : nonempty_levels(dec, 1, i0)) {
    LevelStats ls;
    ls.level = level.i;
    ls.ranges = level.ranges.size();
    const std::size_t before = net.count();
    cover_neighborhoods(space, level, seed, net, nullptr, ls, stats);
    ls.points = net.count() - before;
    stats.levels.push_back(ls);
  }
  if (i0 < dec.z) {
    const Rational tail_eps = level_eps(eps, i0);
    const auto tail = doubling_net(space, tail_eps, C, seed ^ 0x7a11ULL, vc.d, dres);
    for (auto ls : tail.stats.levels) {
      ls.level += i0;
      stats.levels.push_back(ls);
    }
    stats.draws += tail.stats.draws;
    stats.repairs += tail.stats.repairs;
    net |= tail.candidate;
  }
  return finish(space, NetMethod::doubling_small, net, eps, std::move(stats));
}

NetReport cal_net(const RangeSpace& space, const Rational& eps, std::size_t budget, std::uint64_t seed,
                  std::size_t draw_cap) {
  check_eps(eps);
  if (budget == 0) throw std::invalid_argument("CAL needs a budget of at least one label");
  NetStats stats;
  stats.seed = seed;
  const std::uint64_t max_draws = budget >= 63 ? static_cast<std::uint64_t>(-1) : (std::uint64_t{1} << budget);

  std::vector<std::size_t> alive(space.range_count());
  std::iota(alive.begin(), alive.end(), 0);
  auto union_of = [&] {
    PointSet u = space.empty_set();
    for (auto r : alive) u |= space.range(r);
    return u;
  };
  PointSet region = union_of();
  PointSet net = space.empty_set();
  std::size_t t = 0;
  std::uint64_t m = 0;
  if (space.total_weight() > 0) {
    const WeightedSampler sampler(space.weights());
    Rng rng(seed);
    while (t < budget && m < max_draws && m < draw_cap) {
      if (alive.empty()) {
        stats.family_exhausted = true;
        break;
      }
      ++m;
      const std::size_t x = sampler.draw(rng);
      if (!region.test(x)) continue;
      net.set(x);
      std::erase_if(alive, [&](std::size_t r) { return space.range(r).test(x); });
      region = union_of();
      ++t;
    }
  }
  stats.draws = static_cast<std::size_t>(m);
  stats.queries = t;
  stats.surviving = alive;
  return finish(space, NetMethod::cal, net, eps, std::move(stats));
}

std::vector<std::size_t> greedy_hitting_set(std::span<const PointSet> targets, const PointSet& allowed) {
  std::vector<PointSet> open;
  for (const auto& t : targets) {
    PointSet u = t & allowed;
    if (!u.empty()) open.push_back(std::move(u));
  }
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> hits(allowed.capacity());
  while (!open.empty()) {
    std::fill(hits.begin(), hits.end(), 0);
    for (const auto& t : open) t.for_each([&](std::size_t x) { ++hits[x]; });
    const std::size_t best = static_cast<std::size_t>(std::max_element(hits.begin(), hits.end()) - hits.begin());
    chosen.push_back(best);
    std::erase_if(open, [&](const PointSet& t) { return t.test(best); });
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

NetReport greedy_net(const RangeSpace& space, const Rational& eps) {
  check_eps(eps);
  std::vector<PointSet> targets;
  for (auto r : qualifying_ranges(space, eps)) targets.push_back(space.range(r));
  const auto chosen = greedy_hitting_set(targets, space.support());
  NetStats stats;
  return finish(space, NetMethod::greedy, PointSet(space.size(), chosen), eps, std::move(stats));
}

namespace {

class HittingSetSolver {
 public:
  explicit HittingSetSolver(std::vector<PointSet> targets) : targets_(std::move(targets)) {}

  std::vector<std::size_t> solve() {
    best_ = greedy_hitting_set(targets_, full_mask());
    std::vector<std::size_t> chosen;
    PointSet forbidden(targets_.empty() ? 0 : targets_.front().capacity());
    std::vector<PointSet> open = targets_;
    search(open, forbidden, chosen);
    return best_;
  }

 private:
  PointSet full_mask() const {
    PointSet m(targets_.empty() ? 0 : targets_.front().capacity());
    for (const auto& t : targets_) m |= t;
    return m;
  }

  static std::size_t disjoint_count(const std::vector<PointSet>& open) {
    std::vector<std::size_t> order(open.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto ca = open[a].count();
      const auto cb = open[b].count();
      return ca != cb ? ca < cb : a < b;
    });
    std::size_t count = 0;
    PointSet used(open.front().capacity());
    for (auto i : order)
      if (!open[i].intersects(used)) {
        used |= open[i];
        ++count;
      }
    return count;
  }

  void search(std::vector<PointSet>& open, PointSet& forbidden, std::vector<std::size_t>& chosen) {
    if (open.empty()) {
      if (chosen.size() < best_.size()) {
        best_ = chosen;
        std::sort(best_.begin(), best_.end());
      }
      return;
    }
    if (chosen.size() + disjoint_count(open) >= best_.size()) return;

    std::size_t pick = 0;
    for (std::size_t i = 1; i < open.size(); ++i)
      if (open[i].count() < open[pick].count()) pick = i;
    std::vector<std::size_t> branch = open[pick].indices();
    std::vector<std::size_t> score(branch.size(), 0);
    for (std::size_t b = 0; b < branch.size(); ++b)
      for (const auto& t : open) score[b] += t.test(branch[b]);
    std::vector<std::size_t> order(branch.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });

    // Branch k takes the k-th point and forbids the earlier ones.
    PointSet local_forbidden = forbidden;
    for (auto b : order) {
      const std::size_t x = branch[b];
      std::vector<PointSet> next;
      bool dead = false;
      for (const auto& t : open) {
        if (t.test(x)) continue;
        PointSet u = t;
        u.subtract(local_forbidden);
        if (u.empty()) {
          dead = true;
          break;
        }
        next.push_back(std::move(u));
      }
      if (!dead) {
        chosen.push_back(x);
        search(next, local_forbidden, chosen);
        chosen.pop_back();
      }
      local_forbidden.set(x);
      if (chosen.size() + 1 >= best_.size()) break;
    }
  }

  std::vector<PointSet> targets_;
  std::vector<std::size_t> best_;
};

// Keeps only inclusion-minimal targets: hitting them hits their supersets.
std::vector<PointSet> minimal_targets(std::vector<PointSet> targets) {
  std::sort(targets.begin(), targets.end(), [](const PointSet& a, const PointSet& b) {
    const auto ca = a.count();
    const auto cb = b.count();
    return ca != cb ? ca < cb : a.lex_less(b);
  });
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  std::vector<PointSet> kept;
  for (auto& t : targets)
    if (std::none_of(kept.begin(), kept.end(), [&](const PointSet& k) { return k.is_subset_of(t); }))
      kept.push_back(std::move(t));
  return kept;
}

}  // namespace

NetReport min_net_exact(const RangeSpace& space, const Rational& eps, std::size_t cap) {
  check_eps(eps);
  const auto qualifying = qualifying_ranges(space, eps);
  if (qualifying.size() > cap || space.support().count() > cap)
    throw CapExceeded("exact minimum net is limited to " + std::to_string(cap) + " qualifying ranges and points");
  std::vector<PointSet> targets;
  for (auto r : qualifying) targets.push_back(space.range(r) & space.support());
  targets = minimal_targets(std::move(targets));

  // Components of the intersection graph are solved separately.
  const std::size_t k = targets.size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (targets[a].intersects(targets[b])) parent[find(a)] = find(b);

  PointSet net = space.empty_set();
  for (std::size_t root = 0; root < k; ++root) {
    if (find(root) != root) continue;
    std::vector<PointSet> component;
    for (std::size_t a = 0; a < k; ++a)
      if (find(a) == root) component.push_back(targets[a]);
    for (auto x : HittingSetSolver(std::move(component)).solve()) net.set(x);
  }
  NetStats stats;
  return finish(space, NetMethod::exact, net, eps, std::move(stats));
}

long double bound_stratified(std::size_t d, const CapacityVector& tau) {
  long double sum = 0;
  for (const auto& t : tau.tau) {
    const long double v = t.to_long_double();
    sum += v * std::log(v + 1);
  }
  return static_cast<long double>(std::max<std::size_t>(d, 1)) * sum;
}

long double bound_capacity(std::size_t d, const Rational& tau, int z) {
  const long double v = tau.to_long_double();
  return static_cast<long double>(std::max<std::size_t>(d, 1)) * v * std::log(v + 1) * z;
}

long double bound_doubling(std::size_t d, long double doubling, const CapacityVector& tau) {
  long double sum = 0;
  for (const auto& t : tau.tau) {
    const long double v = t.to_long_double();
    sum += (std::max(std::log(doubling / v), std::log(2.0L)) + static_cast<long double>(d)) * v;
  }
  return sum;
}

long double bound_doubling_small(std::size_t d, long double doubling, const Rational& eps) {
  const long double D = std::max(doubling, 1.0L);
  return static_cast<long double>(std::max<std::size_t>(d, 1)) * D *
         std::max(std::log2(1 / (eps.to_long_double() * D)), 1.0L);
}

}  // namespace epsnet
