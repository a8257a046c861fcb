#include <doctest.h>

#include "epsnet/complexity.hpp"
#include "epsnet/one_inclusion.hpp"
#include "epsnet/random.hpp"
#include "helpers.hpp"

using namespace epsnet;
using testkit::Raw;

namespace {

std::vector<PointSet> sets(std::size_t n, const Raw& raw) {
  std::vector<PointSet> out;
  for (const auto& r : raw) out.emplace_back(n, std::span<const std::size_t>(r));
  return out;
}

// Thresholds on three points plus a set missing the sample: a 4-vertex path.
std::vector<PointSet> thresholds() { return sets(4, Raw{{3}, {2}, {1, 2}, {0, 1, 2}}); }

}  // namespace

TEST_CASE("graph construction") {
  auto cube = build_oig(testkit::power_set(3).ranges(), std::vector<std::size_t>{0, 1, 2});
  CHECK(cube.vertices.size() == 7);
  auto cube_full = build_oig(classifier_family(testkit::power_set(3)), std::vector<std::size_t>{0, 1, 2});
  CHECK(cube_full.vertices.size() == 8);
  CHECK(cube_full.edges.size() == 12);

  const std::vector<std::size_t> s{0, 1, 2};
  auto path = build_oig(thresholds(), s);
  CHECK(path.vertices.size() == 4);
  CHECK(path.edges.size() == 3);
  for (std::size_t e = 0; e < path.edges.size(); ++e) {
    const auto diff = path.vertices[path.edges[e].first] ^ path.vertices[path.edges[e].second];
    CHECK(diff.count() == 1);
    CHECK(diff.test(path.edge_position[e]));
  }

  auto single = build_oig(sets(2, Raw{{0}, {1}}), std::vector<std::size_t>{0});
  CHECK(single.vertices.size() == 2);
  CHECK(single.edges.size() == 1);

  // Repeated sample points: coordinates agree, so no edge crosses them.
  auto repeated = build_oig(sets(2, Raw{{0}, {1}}), std::vector<std::size_t>{0, 0});
  CHECK(repeated.vertices.size() == 2);
  CHECK(repeated.edges.empty());
  CHECK_THROWS_AS(build_oig(thresholds(), std::vector<std::size_t>{}), std::invalid_argument);
}

TEST_CASE("density and bounded orientation") {
  const std::vector<std::size_t> s{0, 1, 2};
  auto cube = build_oig(classifier_family(testkit::power_set(3)), s);
  CHECK(density_check(cube, 3, 50, 1).ok);
  CHECK_FALSE(density_check(cube, 1, 0, 1).ok);
  CHECK(orient_bounded(cube, 3).has_value());
  CHECK(orient_bounded(cube, 2).has_value());
  CHECK_FALSE(orient_bounded(cube, 1).has_value());

  auto path = build_oig(thresholds(), s);
  auto dr = density_check(path, 1, 100, 4);
  CHECK(dr.ok);
  CHECK(dr.subgraphs_checked == 100);
  auto o = orient_bounded(path, 1);
  REQUIRE(o.has_value());
  for (auto deg : out_degrees(path, *o)) CHECK(deg <= 1);
}

TEST_CASE("prediction and leave-one-out") {
  const std::vector<std::size_t> s{0, 1, 2};
  auto path = build_oig(thresholds(), s);
  auto o = orient_bounded(path, 1);
  REQUIRE(o);

  // Vertices in lexicographic order: {} {0,1,2} {1,2} {2}; path {} - {2} - {1,2} - {0,1,2}.
  const PointSet f_star = restrict_to_sample(PointSet(4, {1, 2}), s);
  auto loo = loo_error(path, *o, f_star);
  CHECK(loo.positions == 3);
  CHECK(loo.error <= Rational(1, 3));
  CHECK(loo.mistakes == out_degrees(path, *o)[*path.find(f_star)]);

  // Hiding position 0 of {1,2}: both {1,2} and {0,1,2} are consistent and the
  // edge's head decides.
  const auto u = *path.find(f_star);
  const auto v = *path.find(restrict_to_sample(PointSet(4, {0, 1, 2}), s));
  const auto e = *path.edge_between(u, v);
  CHECK(oig_predict(path, *o, 0, f_star) == (o->head(path, e) == v));
  CHECK(oig_predict(path, *o, 0, f_star) == oig_predict(path, *o, 0, f_star));

  // Position 1 of {2}: {0,2}-like completion is not a vertex, so the answer is forced.
  const PointSet only2 = restrict_to_sample(PointSet(4, {2}), s);
  CHECK(oig_predict(path, *o, 2, only2) == true);

  auto single = build_oig(sets(2, Raw{{0}, {1}}), std::vector<std::size_t>{0});
  auto so = orient_bounded(single, 1);
  REQUIRE(so);
  CHECK(oig_predict(single, *so, 0, PointSet(1)) == (so->head(single, 0) == *single.find(PointSet(1, {0}))));

  auto alone = build_oig(sets(3, Raw{{0, 2}}), s);
  auto ao = orient_bounded(alone, 1);
  CHECK(loo_error(alone, *ao, alone.vertices[0]).mistakes == 0);
  CHECK_THROWS_AS(loo_error(alone, *ao, PointSet(3)), std::invalid_argument);

  auto cube = build_oig(classifier_family(testkit::power_set(3)), s);
  auto co = orient_bounded(cube, 3);
  for (const auto& f : cube.vertices) CHECK(loo_error(cube, *co, f).error <= Rational(1));
}

TEST_CASE("property: leave-one-out mistakes equal the target's out-degree") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    const std::size_t n = 3 + rng.below(7);
    Raw raw;
    for (std::size_t k = 0; k < 3 + rng.below(20); ++k) {
      std::vector<std::size_t> r;
      for (std::size_t x = 0; x < n; ++x)
        if (rng.below(2)) r.push_back(x);
      raw.push_back(r);
    }
    auto space = testkit::uniform(n, raw);
    const auto family = classifier_family(space);
    const std::size_t d = vc_dimension(space).d;
    std::vector<std::size_t> sample(2 + rng.below(6));
    for (auto& x : sample) x = rng.below(n);
    auto g = build_oig(family, sample);
    CHECK(density_check(g, d, 20, seed).ok);
    auto o = orient_bounded(g, std::max<std::size_t>(d, 1));
    REQUIRE(o);
    const auto deg = out_degrees(g, *o);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      CHECK(deg[v] <= std::max<std::size_t>(d, 1));
      const auto loo = loo_error(g, *o, g.vertices[v]);
      CHECK(loo.mistakes == deg[v]);
    }
    // Functions with equal projections predict identically.
    for (const auto& f : family) {
      const auto a = restrict_to_sample(f, sample);
      for (std::size_t i = 0; i < sample.size(); ++i) CHECK(oig_predict(g, *o, i, a) == oig_predict(g, *o, i, a));
    }
  }
}

TEST_CASE("expected risk estimate") {
  auto thresholds10 = testkit::chain(10);
  const auto family = classifier_family(thresholds10);
  auto est = expected_risk_estimate(thresholds10, family, thresholds10.range(4), 4, 1, 10000, 3);
  CHECK(est.mean <= 0.2 + 3 * est.standard_error);
  auto again = expected_risk_estimate(thresholds10, family, thresholds10.range(4), 4, 1, 10000, 3);
  CHECK(again.mean == est.mean);

  auto one = testkit::uniform(4, Raw{{1, 2}});
  const std::vector<PointSet> just{one.range(0)};
  CHECK(expected_risk_estimate(one, just, one.range(0), 3, 1, 100, 1).mean == 0.0);
}
