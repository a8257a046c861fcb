#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "epsnet/clique.hpp"
#include "epsnet/complexity.hpp"
#include "epsnet/random.hpp"
#include "helpers.hpp"

using namespace epsnet;
using testkit::Raw;
using testkit::random_space;

namespace {

// Doubling constant over every breakpoint including all pairwise rho values.
std::size_t doubling_all_breakpoints(const RangeSpace& s, const Rational& eps) {
  std::vector<Rational> cands{eps};
  const std::size_t r = s.range_count();
  for (std::size_t i = 0; i < r; ++i) cands.push_back(measure(s, i) / Rational(2));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) cands.push_back(rho(s, i, j));
  std::size_t best = 0;
  for (const auto& c : cands) {
    if (c < eps || c > Rational(1)) continue;
    std::vector<std::size_t> el;
    for (std::size_t i = 0; i < r; ++i)
      if (measure(s, i) <= c * Rational(2)) el.push_back(i);
    std::vector<PointSet> adj(el.size(), PointSet(el.size()));
    for (std::size_t a = 0; a < el.size(); ++a)
      for (std::size_t b = 0; b < el.size(); ++b)
        if (a != b && rho(s, el[a], el[b]) >= c) adj[a].set(b);
    best = std::max(best, max_clique(adj).size());
  }
  return best;
}

}  // namespace

TEST_CASE("vc dimension") {
  CHECK(vc_dimension(testkit::power_set(3)).d == 3);
  CHECK(vc_dimension(testkit::singletons(5)).d == 1);
  CHECK(vc_dimension(testkit::intervals(5)).d == 2);
  CHECK(vc_dimension(testkit::chain(6)).d == 1);
  CHECK(vc_dimension(testkit::fixed_a()).d == 2);
  CHECK(vc_dimension(testkit::fixed_b()).d == 2);
  auto r = vc_dimension(testkit::intervals(5));
  CHECK(r.exact);
  CHECK(is_shattered(testkit::intervals(5).ranges(), r.witness));

  auto big = testkit::singletons(30);
  CHECK_THROWS_AS(vc_dimension(big), CapExceeded);
  auto lb = vc_dimension(big, false);
  CHECK_FALSE(lb.exact);
  CHECK(lb.d == 1);
  CHECK(vc_dimension_lower_bound(testkit::intervals(9).ranges(), 9, 16, 1).d == 2);
}

TEST_CASE("projection function and shallow cells") {
  CHECK(projection_function(testkit::singletons(5), 0).value == 1);
  CHECK(projection_function(testkit::singletons(5), 3).value == 4);
  CHECK(projection_function(testkit::power_set(3), 3).value == 8);
  CHECK(projection_function(testkit::intervals(5), 5).value == 16);
  CHECK(projection_function(testkit::fixed_a(), 3).value == 7);
  CHECK(projection_function(testkit::fixed_a(), 4).value == 8);
  CHECK(projection_function(testkit::fixed_b(), 3).value == 6);
  CHECK(projection_function(testkit::fixed_b(), 4).value == 7);

  CHECK(shallow_cell(testkit::singletons(5), 3, 0).value == 1);
  CHECK(shallow_cell(testkit::intervals(6), 4, 1).value == 5);
  CHECK(shallow_cell(testkit::fixed_a(), 4, 1).value == 5);
  CHECK(shallow_cell(testkit::fixed_b(), 4, 1).value == 4);
  CHECK(shallow_cell(testkit::intervals(4), 9, 9).value == projection_function(testkit::intervals(4), 4).value);

  EnumerationOptions sampled;
  sampled.max_subsets = 10;
  sampled.samples = 500;
  auto s = projection_function(testkit::intervals(8), 4, sampled);
  CHECK_FALSE(s.exact);
  CHECK(s.value <= 11);
  CHECK(s.value == 11);
  CHECK_THROWS_AS(shallow_cell_exact(testkit::intervals(8), 4, 2, 10), CapExceeded);

  // Three 2-sets on three points: a pair sees 3 traces of size <= 1, the
  // whole triple only the empty one; the count over |Y| <= y keeps the pair.
  auto pairs = testkit::uniform(3, Raw{{0, 1}, {0, 2}, {1, 2}});
  const std::vector<std::size_t> triple{0, 1, 2};
  CHECK(count_traces(pairs.ranges(), triple, 1) == 1);
  CHECK(shallow_cell(pairs, 2, 1).value == 3);
  CHECK(shallow_cell(pairs, 3, 1).value == 3);
}

TEST_CASE("property: shallow cells are monotone and reach pi") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto s = random_space(seed, 8, 12);
    for (std::size_t y = 0; y <= s.size(); ++y) {
      for (std::size_t l = 0; l <= y; ++l) {
        const auto v = shallow_cell(s, y, l).value;
        if (l > 0) CHECK(v >= shallow_cell(s, y, l - 1).value);
        if (y > 0 && l < y) CHECK(v >= shallow_cell(s, y - 1, l).value);
      }
      CHECK(shallow_cell(s, y, y).value == projection_function(s, y).value);
    }
  }
}

TEST_CASE("sauer check") {
  auto rep = sauer_check(testkit::singletons(5));
  CHECK(rep.d == 1);
  REQUIRE(rep.rows.size() == 5);
  CHECK(rep.rows[2].y == 3);
  CHECK(rep.rows[2].pi == 4);
  CHECK(rep.rows[2].binomial_sum == 4);
  auto ps = sauer_check(testkit::power_set(3));
  CHECK(ps.rows.back().pi == 8);
  CHECK(ps.rows.back().binomial_sum == 8);
  auto iv = sauer_check(testkit::intervals(5));
  CHECK(iv.rows.back().pi == 16);
  CHECK(iv.rows.back().binomial_sum == 16);
  auto empty = sauer_check(RangeSpace::build(3, {1, 1, 1}, Raw{}));
  CHECK(empty.d == 0);
  CHECK(empty.rows.size() == 4);
}

TEST_CASE("alexander capacity") {
  CHECK(alexander_capacity(testkit::singletons(4), Rational(1, 4)) == Rational(4));
  CHECK(alexander_capacity(testkit::uniform(4, Raw{{0}, {0, 1}, {0, 1, 2, 3}}), Rational(1, 4)) == Rational(1));
  CHECK(alexander_capacity(testkit::uniform(2, Raw{{0, 1}}), Rational(1, 2)) == Rational(1));
  CHECK(alexander_capacity(testkit::fixed_a(), Rational(1, 4)) == Rational(11, 4));
  CHECK(alexander_capacity(testkit::fixed_a(), Rational(1, 3)) == Rational(11, 4));
  CHECK(alexander_capacity(testkit::fixed_b(), Rational(1, 4)) == Rational(3));
  CHECK_THROWS_AS(alexander_capacity(testkit::fixed_b(), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(alexander_capacity(testkit::fixed_b(), Rational(3, 2)), std::invalid_argument);

  CHECK(dyadic_levels(Rational(1, 8)) == 4);
  CHECK(dyadic_levels(Rational(1, 10)) == 5);
  CHECK(level_eps(Rational(1, 8), 2) == Rational(1, 2));
  CHECK(level_eps(Rational(1, 8), 5) == Rational(1));
  auto v = capacity_vector(testkit::singletons(8), Rational(1, 8));
  CHECK(v.z == 4);
  REQUIRE(v.tau.size() == 4);
  CHECK(v.tau[0] == Rational(4));
  CHECK(v.tau[1] == Rational(2));
  CHECK(v.tau[2] == Rational(1));
  CHECK(v.tau[3] == Rational(1));
}

TEST_CASE("property: capacity bounds") {
  const std::vector<Rational> grid{Rational(1, 16), Rational(1, 10), Rational(1, 8), Rational(1, 5), Rational(1, 4),
                                   Rational(1, 3),  Rational(1, 2),  Rational(2, 3), Rational(1)};
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto s = random_space(seed, 12, 20);
    Rational previous(1000000);
    for (const auto& eps : grid) {
      const Rational t = alexander_capacity(s, eps);
      CHECK(t >= Rational(1));
      CHECK(t <= Rational(1) / eps);
      CHECK(t <= previous);
      previous = t;
    }
    for (const auto& eps : {Rational(1, 4), Rational(1, 8), Rational(1, 16)}) {
      auto v = capacity_vector(s, eps);
      Rational sum(0);
      for (std::size_t i = 0; i < v.tau.size(); ++i) {
        sum = sum + v.tau[i];
        if (i + 1 < v.tau.size()) {
          CHECK(v.tau[i] >= v.tau[i + 1]);
          CHECK(v.tau[i] <= v.tau[i + 1] * Rational(2));
        }
      }
      CHECK(sum <= Rational(1) / eps);
    }
  }
}

TEST_CASE("doubling constant") {
  CHECK(doubling_constant(testkit::uniform(3, Raw{{0, 1}}), Rational(1, 4)).lower == 1);
  auto four = testkit::singletons(8, 4);
  auto d4 = doubling_constant(four, Rational(1, 8));
  CHECK(d4.exact);
  CHECK(d4.lower == 4);
  CHECK(d4.witness.size() == 4);
  CHECK(doubling_constant(testkit::fixed_a(), Rational(1, 8)).lower == 7);
  CHECK(doubling_constant(testkit::fixed_a(), Rational(1, 4)).lower == 7);
  CHECK(doubling_constant(testkit::fixed_b(), Rational(1, 8)).lower == 6);
  CHECK(doubling_constant(testkit::fixed_b(), Rational(1, 4)).lower == 6);

  DoublingOptions small;
  small.cap = 3;
  CHECK_THROWS_AS(doubling_constant(four, Rational(1, 8), small), CapExceeded);
  small.mode = DoublingMode::automatic;
  CHECK_FALSE(doubling_constant(four, Rational(1, 8), small).exact);
}

TEST_CASE("property: doubling constant over reduced breakpoints equals the full enumeration") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    auto s = random_space(seed, 9, 14);
    for (const auto& eps : {Rational(1, 8), Rational(1, 5), Rational(1, 3)}) {
      const auto exact = doubling_constant(s, eps);
      CHECK(exact.lower == doubling_all_breakpoints(s, eps));

      DoublingOptions opt;
      opt.mode = DoublingMode::bracket;
      opt.seed = seed;
      const auto bracket = doubling_constant(s, eps, opt);
      CHECK(bracket.lower <= exact.lower);
      CHECK(bracket.upper >= static_cast<long double>(exact.lower));

      // Packing bound at the achieving separation.
      const auto d = static_cast<long double>(vc_dimension(s).d);
      const long double e = std::exp(1.0L);
      const long double level = exact.argmax_eps0.to_long_double();
      CHECK(static_cast<long double>(exact.lower) <= e * (d + 1) * std::pow(2 * e / level, d));
    }
  }
}

TEST_CASE("star number") {
  auto s = star_number(testkit::singletons(6));
  CHECK(s.exact);
  CHECK(s.lower == 6);
  CHECK(star_number(testkit::uniform(3, Raw{{0, 1}})).lower == 1);
  CHECK(star_number(testkit::fixed_a()).lower == 5);
  CHECK(star_number(testkit::fixed_b()).lower == 3);
  CHECK(star_number(testkit::chain(5)).lower == 1);

  auto w = star_number(testkit::fixed_a());
  const auto a = testkit::fixed_a();
  PointSet chosen(a.size(), w.points);
  for (std::size_t i = 0; i < w.points.size(); ++i) CHECK((a.range(w.ranges[i]) & chosen) == PointSet(a.size(), {w.points[i]}));

  auto big = star_number(testkit::singletons(40), 24);
  CHECK_FALSE(big.exact);
  CHECK(big.lower == 40);
  CHECK(big.upper == 40);
}

TEST_CASE("property: capacity under uniform measure never exceeds the star number") {
  for (std::uint64_t seed = 200; seed < 220; ++seed) {
    Rng rng(seed);
    const std::size_t n = 4 + rng.below(6);
    Raw raw;
    for (std::size_t k = 0; k < 10; ++k) {
      std::vector<std::size_t> r;
      for (std::size_t x = 0; x < n; ++x)
        if (rng.below(3) == 0) r.push_back(x);
      raw.push_back(r);
    }
    auto s = testkit::uniform(n, raw);
    const auto star = star_number(s);
    for (std::size_t k = 1; k <= n; ++k) {
      const Rational eps(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n));
      CHECK(alexander_capacity(s, eps) <= max(min(Rational(static_cast<std::int64_t>(star.lower)), Rational(1) / eps), Rational(1)));
    }
  }
}

TEST_CASE("profile") {
  ProfileOptions opt;
  opt.pi_at = {2, 3};
  opt.phi_at = {{4, 1}};
  auto p = compute_profile(testkit::fixed_a(), Rational(1, 4), opt);
  CHECK(p.d.d == 2);
  CHECK(p.pi[1].second.value == 7);
  CHECK(p.tau == Rational(11, 4));
  CHECK(p.tau_vec.z == 3);
  CHECK(p.doubling.lower == 7);
  CHECK(p.phi_hat[0].value.value == 5);
  CHECK(p.star.lower == 5);
}

TEST_CASE("property: max clique against subset enumeration, joins included") {
  Rng rng(404);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t a = 1 + rng.below(7), b = rng.below(7), n = a + b;
    std::vector<PointSet> adj(n, PointSet(n));
    auto link = [&](std::size_t u, std::size_t v) {
      adj[u].set(v);
      adj[v].set(u);
    };
    // two random parts; on even trials every cross pair is joined
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        const bool cross = (u < a) != (v < a);
        if ((cross && trial % 2 == 0) || rng.below(2) == 0) link(u, v);
      }
    std::size_t best = 0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      bool ok = true;
      for (std::size_t u = 0; u < n && ok; ++u)
        for (std::size_t v = u + 1; v < n && ok; ++v)
          if ((mask >> u & 1U) && (mask >> v & 1U) && !adj[u].test(v)) ok = false;
      if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
    }
    const auto clique = max_clique(adj);
    CHECK(clique.size() == best);
    CHECK(std::is_sorted(clique.begin(), clique.end()));
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j) CHECK(adj[clique[i]].test(clique[j]));
  }
}
