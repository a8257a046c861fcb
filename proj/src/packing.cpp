#include "epsnet/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "epsnet/clique.hpp"
#include "epsnet/complexity.hpp"
#include "epsnet/parallel.hpp"
#include "epsnet/random.hpp"

namespace epsnet {
namespace {

constexpr long double kE = 2.718281828459045235360287471352662498L;

bool far_apart(const RangeSpace& space, const PointSet& a, const PointSet& b, const Rational& level) {
  const std::int64_t w = rho_weight(space, a, b);
  return static_cast<__int128>(w) * level.den() >= static_cast<__int128>(level.num()) * space.total_weight();
}

void check_level(const Rational& level) {
  if (!level.is_positive()) throw std::invalid_argument("packing level must be positive");
}

}  // namespace

std::string to_string(PackingCertificate c) {
  return c == PackingCertificate::exact_maximum ? "exact-maximum" : "greedy-maximal";
}

std::vector<std::size_t> eligible_ranges(const RangeSpace& space, const std::optional<Rational>& ceiling) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space.range_count(); ++i)
    if (!ceiling || space.measure_at_most(space.range(i), *ceiling)) out.push_back(i);
  return out;
}

Packing greedy_packing_in_order(const RangeSpace& space, std::span<const std::size_t> candidates, const Rational& level) {
  check_level(level);
  Packing p;
  p.space_name = space.name();
  p.level = level;
  for (auto c : candidates) {
    const auto& r = space.range(c);
    const bool fits = std::all_of(p.members.begin(), p.members.end(),
                                  [&](std::size_t m) { return far_apart(space, r, space.range(m), level); });
    if (fits) p.members.push_back(c);
  }
  std::sort(p.members.begin(), p.members.end());
  return p;
}

Packing greedy_packing(const RangeSpace& space, const Rational& level, const std::optional<Rational>& ceiling,
                       std::uint64_t seed) {
  auto order = eligible_ranges(space, ceiling);
  Rng rng(seed);
  rng.shuffle(order);
  Packing p = greedy_packing_in_order(space, order, level);
  p.ceiling = ceiling;
  return p;
}

Packing max_packing_exact(const RangeSpace& space, const Rational& level, const std::optional<Rational>& ceiling,
                          std::size_t cap) {
  check_level(level);
  const auto eligible = eligible_ranges(space, ceiling);
  if (eligible.size() > cap)
    throw CapExceeded("exact packing needs at most " + std::to_string(cap) + " eligible ranges, got " +
                      std::to_string(eligible.size()));
  const std::size_t m = eligible.size();
  std::vector<PointSet> adjacency(m, PointSet(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (far_apart(space, space.range(eligible[a]), space.range(eligible[b]), level)) {
        adjacency[a].set(b);
        adjacency[b].set(a);
      }
  Packing p;
  p.space_name = space.name();
  p.level = level;
  p.ceiling = ceiling;
  p.certificate = PackingCertificate::exact_maximum;
  for (auto v : max_clique(adjacency)) p.members.push_back(eligible[v]);
  std::sort(p.members.begin(), p.members.end());
  return p;
}

PackingCheck verify_packing(const RangeSpace& space, const Packing& packing) {
  PackingCheck check;
  const auto& members = packing.members;
  for (std::size_t a = 0; a < members.size(); ++a) {
    const Rational pa = space.measure_of(space.range(members[a]));
    if (packing.ceiling && pa > *packing.ceiling) check.within_ceiling = false;
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (rho(space, members[a], members[b]) < packing.level) check.separated = false;
  }
  for (auto c : eligible_ranges(space, packing.ceiling)) {
    if (std::binary_search(members.begin(), members.end(), c)) continue;
    const bool isolated = std::all_of(members.begin(), members.end(),
                                      [&](std::size_t m) { return rho(space, c, m) >= packing.level; });
    if (isolated) check.maximal = false;
  }
  return check;
}

long double haussler_bound(std::size_t d, const Rational& level) {
  const long double dd = static_cast<long double>(d);
  return kE * (dd + 1) * std::pow(2 * kE / level.to_long_double(), dd);
}

HausslerReport haussler_certificate(const RangeSpace& space, const Packing& packing, std::optional<std::size_t> d) {
  HausslerReport r;
  r.size = packing.size();
  r.level = packing.level;
  if (!d) {
    std::vector<PointSet> sub;
    for (auto m : packing.members) sub.push_back(space.range(m));
    d = vc_dimension_exact(sub, space.size()).d;
  }
  r.d = *d;
  r.bound = haussler_bound(r.d, r.level);
  r.margin = r.bound - static_cast<long double>(r.size);
  if (static_cast<long double>(r.size) > r.bound)
    throw TheoremViolation("packing of size " + std::to_string(r.size) + " exceeds e(d+1)(2e/eps)^d = " +
                           std::to_string(static_cast<double>(r.bound)));
  return r;
}

long double haussler_delta_objective(std::size_t d, long double eps, long double delta) {
  return std::pow(2 * kE / (eps * delta), static_cast<long double>(d)) / (1 - delta);
}

Rational haussler_delta_factor(std::size_t d) {
  if (d == 0) return Rational(1);
  const auto dd = static_cast<std::int64_t>(d);
  // (1/(1 - delta)) * delta^{-d} with delta = d/(d+1)
  const Rational delta(dd, dd + 1);
  Rational factor = Rational(1) / (Rational(1) - delta);
  for (std::size_t i = 0; i < d; ++i) factor = factor / delta;
  return factor;
}

bool haussler_delta_is_stationary(std::size_t d) {
  const auto dd = static_cast<std::int64_t>(d);
  const Rational delta(dd, dd + 1);
  return Rational(1) / (Rational(1) - delta) == Rational(dd) / delta;
}

std::size_t lemma4_sample_size(std::size_t d, const Rational& eps, const Rational& delta) {
  if (!eps.is_positive() || !delta.is_positive()) throw std::invalid_argument("eps and delta must be positive");
  const Rational x = Rational(2 * static_cast<std::int64_t>(d)) / (eps * delta);
  return static_cast<std::size_t>((x.num() + x.den() - 1) / x.den());
}

MonteCarloEstimate projection_count_estimate(const RangeSpace& space, std::span<const std::size_t> members,
                                             std::size_t sample_size, std::size_t trials, std::uint64_t seed) {
  if (sample_size == 0 || trials == 0) throw std::invalid_argument("sample size and trial count must be positive");
  std::vector<PointSet> family;
  for (auto m : members) family.push_back(space.range(m));
  const WeightedSampler sampler(space.weights());
  std::vector<double> counts(trials);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng = Rng::stream(seed, t);
    PointSet a = space.empty_set();
    for (std::size_t i = 0; i < sample_size; ++i) a.set(sampler.draw(rng));
    std::vector<PointSet> traces;
    traces.reserve(family.size());
    for (const auto& r : family) traces.push_back(r & a);
    std::sort(traces.begin(), traces.end(), PointSetLexLess{});
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    counts[t] = static_cast<double>(traces.size());
  });
  MonteCarloEstimate e;
  e.trials = trials;
  e.mean = std::accumulate(counts.begin(), counts.end(), 0.0) / static_cast<double>(trials);
  if (trials > 1) {
    double ss = 0;
    for (double c : counts) ss += (c - e.mean) * (c - e.mean);
    e.standard_error = std::sqrt(ss / static_cast<double>(trials - 1) / static_cast<double>(trials));
  }
  return e;
}

long double dudley_style_bound(std::size_t d, long double eps) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0, 1)");
  return std::pow(std::log(1 / eps) / eps, static_cast<long double>(d));
}

}  // namespace epsnet
