#include <doctest.h>

#include <cmath>

#include "epsnet/complexity.hpp"
#include "epsnet/nets.hpp"
#include "helpers.hpp"

using namespace epsnet;
using testkit::Raw;

TEST_CASE("verify_net") {
  const auto s = testkit::uniform(4, Raw{{0, 1}, {2, 3}});
  auto r = verify_net(s, std::vector<std::size_t>{0}, Rational(1, 2));
  CHECK_FALSE(r.is_net);
  REQUIRE(r.violations.size() == 1);
  CHECK(s.range(r.violations[0]) == PointSet(4, {2, 3}));

  CHECK(verify_net(s, s.support(), Rational(1, 100)).is_net);
  const auto empty = verify_net(s, s.empty_set(), Rational(1, 4));
  CHECK(empty.violations.size() == 2);
  // below eps nothing qualifies
  CHECK(verify_net(s, s.empty_set(), Rational(3, 4)).is_net);

  const auto w = RangeSpace::build(3, {1, 0, 1}, Raw{{0, 1}}, "w");
  CHECK_THROWS_AS(verify_net(w, std::vector<std::size_t>{1}, Rational(1, 2)), RangeSpaceError);
  CHECK_THROWS_AS(verify_net(w, std::vector<std::size_t>{7}, Rational(1, 2)), RangeSpaceError);
}

TEST_CASE("iid sizing formulas") {
  // 8 (2 ln 10 + ln 10) / (1/10)
  CHECK(iid_sample_size(IidSizing::vc, 2, Rational(1, 10), Rational(1, 10), 8.0) ==
        static_cast<std::size_t>(std::ceil(80 * 3 * std::log(10.0L))));
  // tau = 1 removes the d term
  CHECK(iid_sample_size(IidSizing::capacity, 5, Rational(1, 8), Rational(1, 10), 8.0, Rational(1)) ==
        static_cast<std::size_t>(std::ceil(64 * std::log(10.0L))));
  CHECK(iid_sample_size(IidSizing::vc, 0, Rational(1), Rational(1), 1.0) == 1);
  CHECK_THROWS_AS(iid_sample_size(IidSizing::vc, 1, Rational(0), Rational(1, 2), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(iid_sample_size(IidSizing::vc, 1, Rational(1, 2), Rational(3, 2), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(iid_sample_size(IidSizing::vc, 1, Rational(1, 2), Rational(1, 2), -1.0), std::invalid_argument);
}

TEST_CASE("iid nets") {
  const auto full = testkit::uniform(5, Raw{{0, 1, 2, 3, 4}, {1, 2}});
  const auto one = iid_net(full, Rational(1), Rational(1, 2), IidSizing::vc, 1.0, 3);
  CHECK(one.is_net);
  CHECK(one.method == NetMethod::iid);

  const auto s = testkit::singletons(20);
  std::size_t ok = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    ok += iid_net(s, Rational(1, 20), Rational(1, 10), IidSizing::vc, 8.0, seed, 1).is_net;
  CHECK(ok >= 180);

  const auto c = testkit::chain(16);
  const auto cap = iid_net(c, Rational(1, 8), Rational(1, 10), IidSizing::capacity, 8.0, 1);
  CHECK(cap.stats.draws == static_cast<std::size_t>(std::ceil(64 * std::log(10.0L))));
  const auto a = iid_net(c, Rational(1, 8), Rational(1, 10), IidSizing::vc, 8.0, 9);
  const auto b = iid_net(c, Rational(1, 8), Rational(1, 10), IidSizing::vc, 8.0, 9);
  CHECK(a.candidate == b.candidate);
}

TEST_CASE("dyadic decomposition") {
  const auto s = testkit::chain(16);
  const auto dec = dyadic_decomposition(s, Rational(1, 8));
  CHECK(dec.z == 4);
  REQUIRE(dec.levels.size() == 5);
  CHECK(dec.levels[0].ranges.size() == 1);  // {0}: 1/16
  CHECK(dec.levels[1].ranges.size() == 2);  // 2/16, 3/16
  CHECK(dec.levels[2].ranges.size() == 4);
  CHECK(dec.levels[3].ranges.size() == 8);
  CHECK(dec.levels[4].ranges.size() == 1);  // P = 1
  CHECK(dec.levels[3].upper == Rational(1));
  CHECK(dec.levels[4].lower == Rational(1));
  for (const auto& level : dec.levels) CHECK(level.support_measure <= level.tau * level.upper);
  check_bucket_inequality(dec, s);
}

TEST_CASE("property: buckets partition the family and satisfy the proof inequality") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto s = testkit::random_space(seed, 12, 20);
    for (const Rational eps : {Rational(1, 4), Rational(1, 8), Rational(1, 16)}) {
      const auto dec = dyadic_decomposition(s, eps);
      std::size_t total = 0;
      for (const auto& level : dec.levels) {
        total += level.ranges.size();
        CHECK(level.support_measure <= level.tau * level.upper);
      }
      CHECK(total == s.range_count());
      CHECK_NOTHROW(check_bucket_inequality(dec, s));
    }
  }
}

TEST_CASE("stratified nets") {
  const auto s = testkit::singletons(8);
  const auto r = stratified_net(s, Rational(1, 8), 8.0, 5);
  CHECK(r.is_net);
  CHECK(r.method == NetMethod::stratified);
  const auto again = stratified_net(s, Rational(1, 8), 8.0, 5);
  CHECK(again.candidate == r.candidate);

  // a single occupied bucket
  const auto one = testkit::uniform(4, Raw{{0, 1}, {2, 3}});
  const auto r1 = stratified_net(one, Rational(1, 2), 8.0, 1);
  CHECK(r1.is_net);
  CHECK(r1.stats.levels.size() == 1);

  // no retries allowed forces the greedy repair on a starved sample
  const auto tiny = stratified_net(s, Rational(1, 8), 0.01, 2, 0);
  CHECK(tiny.is_net);
  CHECK(tiny.stats.repairs >= 1);
}

TEST_CASE("doubling nets") {
  const auto lb = testkit::lower_bound_small();
  const auto r = doubling_net(lb, Rational(1, 5), 8.0, 1);
  CHECK(r.is_net);
  CHECK(r.stats.doubling.has_value());
  const auto starved = doubling_net(lb, Rational(1, 5), 0.01, 1);
  CHECK(starved.is_net);

  CHECK(packing_neighborhood(lb, std::vector<std::size_t>{0, 1, 2}, 2) == std::vector<std::size_t>{2});

  // everything within eps_{i-1} of one range: a single packing member
  const auto nested = testkit::uniform(8, Raw{{0, 1, 2, 3}, {0, 1, 2, 3, 4}});
  const auto n1 = doubling_net(nested, Rational(1, 2), 8.0, 4);
  CHECK(n1.is_net);
  for (const auto& level : n1.stats.levels) CHECK(level.packing == 1);

  const auto small = doubling_net_small_d(lb, Rational(1, 5), 8.0, 1);
  CHECK(small.is_net);
  CHECK(small.method == NetMethod::doubling_small);
  // D = 5 > 1/(2 eps) at eps = 1/5: falls back
  CHECK(small.stats.fallback);

  const auto s = testkit::singletons(32);
  const auto sd = doubling_net_small_d(s, Rational(1, 32), 8.0, 2);
  CHECK(sd.is_net);
}

TEST_CASE("cal") {
  const auto first = RangeSpace::build(3, {1, 0, 0}, Raw{{0}, {0, 1}, {0, 2}}, "first");
  const auto r = cal_net(first, Rational(1, 2), 3, 0);
  CHECK(r.is_net);
  CHECK(r.stats.queries == 1);
  CHECK(r.stats.surviving.empty());
  CHECK(r.stats.family_exhausted);

  const auto s = testkit::singletons(4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = cal_net(s, Rational(1, 4), 4, seed);
    CHECK(c.size() == c.stats.queries);
    CHECK(c.stats.surviving.size() == 4 - c.size());
    CHECK(c.is_net == (c.size() == 4));
    CHECK(c.stats.draws <= 16);
  }
  CHECK_THROWS_AS(cal_net(s, Rational(1, 4), 0, 0), std::invalid_argument);

  const auto short_budget = cal_net(testkit::singletons(6), Rational(1, 6), 2, 0);
  CHECK_FALSE(short_budget.is_net);
  CHECK(short_budget.violations.size() == 4);
}

TEST_CASE("greedy nets") {
  CHECK(greedy_net(testkit::singletons(5, 3), Rational(1, 5)).size() == 3);
  const auto star = testkit::uniform(5, Raw{{0, 1}, {0, 2}, {0, 3, 4}});
  const auto g = greedy_net(star, Rational(1, 5));
  CHECK(g.size() == 1);
  CHECK(g.candidate.test(0));
  // ties go to the lowest index
  CHECK(greedy_net(testkit::uniform(3, Raw{{1, 2}}), Rational(1, 3)).candidate == PointSet(3, {1}));
  CHECK(greedy_hitting_set(std::vector<PointSet>{}, PointSet(3)).empty());
}

TEST_CASE("exact minimum nets") {
  CHECK(min_net_exact(testkit::fixed_a(), Rational(1, 4)).size() == 3);
  CHECK(min_net_exact(testkit::fixed_a(), Rational(1, 8)).size() == 3);
  CHECK(min_net_exact(testkit::fixed_b(), Rational(1, 4)).size() == 3);
  CHECK(min_net_exact(testkit::fixed_b(), Rational(1, 8)).size() == 3);
  CHECK(min_net_exact(testkit::lower_bound_small(), Rational(1, 5)).size() == 4);
  CHECK(min_net_exact(testkit::uniform(2, Raw{{0}, {1}}), Rational(1, 2)).size() == 2);
  CHECK(min_net_exact(testkit::uniform(4, Raw{{1, 2}}), Rational(1, 4)).size() == 1);
  CHECK(min_net_exact(testkit::uniform(4, Raw{}), Rational(1, 4)).size() == 0);
  CHECK_THROWS_AS(min_net_exact(testkit::singletons(30), Rational(1, 30), 10), CapExceeded);
}

TEST_CASE("property: every construction verifies and exact <= greedy <= constructions") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto s = testkit::random_space(seed + 500, 12, 18);
    for (const Rational eps : {Rational(1, 4), Rational(1, 8)}) {
      const auto exact = min_net_exact(s, eps);
      const auto greedy = greedy_net(s, eps);
      CHECK(exact.is_net);
      CHECK(greedy.is_net);
      CHECK(exact.size() <= greedy.size());

      // brute force on the smallest instances
      if (s.size() <= 10) {
        std::size_t best = s.size() + 1;
        const auto q = qualifying_ranges(s, eps);
        for (std::size_t mask = 0; mask < (std::size_t{1} << s.size()); ++mask) {
          PointSet c(s.size());
          for (std::size_t x = 0; x < s.size(); ++x)
            if (mask >> x & 1U && s.support().test(x)) c.set(x);
          if (c.count() >= best) continue;
          bool hits = true;
          for (auto r : q) hits = hits && s.range(r).intersects(c);
          if (hits) best = c.count();
        }
        CHECK(exact.size() == best);
      }

      for (const auto& r : {stratified_net(s, eps, 8.0, seed), doubling_net(s, eps, 8.0, seed),
                            doubling_net_small_d(s, eps, 8.0, seed), stratified_net(s, eps, 0.05, seed, 1),
                            doubling_net(s, eps, 0.05, seed)}) {
        CHECK(r.is_net);
        CHECK(exact.size() <= r.size());
        CHECK(r.candidate.is_subset_of(s.support()));
      }
      const auto cal = cal_net(s, eps, s.size(), seed);
      CHECK(cal.is_net == cal.violations.empty());
      CHECK(cal.size() == cal.stats.queries);
    }
  }
}

TEST_CASE("bound formulas") {
  CapacityVector ones{3, {Rational(1), Rational(1), Rational(1)}};
  CHECK(bound_stratified(2, ones) == doctest::Approx(2 * 3 * std::log(2.0)));
  CHECK(bound_doubling(2, 4, ones) == doctest::Approx(3 * (std::log(4.0) + 2)));
  // D below 2 tau_i floors the log term at ln 2
  CHECK(bound_doubling(1, 1, ones) == doctest::Approx(3 * (std::log(2.0) + 1)));
  CHECK(bound_doubling_small(2, 4, Rational(1, 64)) == doctest::Approx(2 * 4 * 4.0));
  CHECK(bound_capacity(1, Rational(1), 5) == doctest::Approx(5 * std::log(2.0)));
  CHECK(parse_net_method("doubling-small") == NetMethod::doubling_small);
  CHECK_FALSE(parse_net_method("bogus").has_value());
}
