#include <doctest.h>

#include <cmath>

#include "epsnet/complexity.hpp"
#include "epsnet/packing.hpp"
#include "epsnet/random.hpp"
#include "helpers.hpp"

using namespace epsnet;
using testkit::Raw;

TEST_CASE("greedy and exact packings") {
  auto disjoint = testkit::uniform(6, Raw{{0, 1}, {2, 3}, {4, 5}});
  CHECK(greedy_packing(disjoint, Rational(1, 3), std::nullopt, 1).size() == 3);

  auto close = testkit::uniform(10, Raw{{0, 1, 2}, {0, 1, 3}, {0, 1, 2, 3}});
  CHECK(greedy_packing(close, Rational(1, 2), std::nullopt, 7).size() == 1);

  auto four = testkit::singletons(8, 4);
  CHECK(greedy_packing(four, Rational(1, 4), std::nullopt, 3).size() == 4);
  auto exact = max_packing_exact(four, Rational(1, 4), std::nullopt);
  CHECK(exact.size() == 4);
  CHECK(exact.certificate == PackingCertificate::exact_maximum);

  auto chain = testkit::uniform(4, Raw{{0}, {0, 1}, {0, 1, 2}});
  auto c = max_packing_exact(chain, Rational(1, 2), std::nullopt);
  CHECK(c.size() == 2);
  CHECK(c.members == std::vector<std::size_t>{0, 2});

  auto none = max_packing_exact(chain, Rational(1, 2), Rational(1, 10));
  CHECK(none.size() == 0);
  CHECK(verify_packing(chain, none).ok());

  CHECK_THROWS_AS(max_packing_exact(four, Rational(1, 4), std::nullopt, 3), CapExceeded);
  CHECK(to_string(PackingCertificate::greedy_maximal) == "greedy-maximal");
}

TEST_CASE("property: packings verify and greedy never beats exact") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const std::size_t n = 4 + rng.below(9);
    Raw raw;
    for (std::size_t k = 0; k < 4 + rng.below(16); ++k) {
      std::vector<std::size_t> r;
      for (std::size_t x = 0; x < n; ++x)
        if (rng.below(3) == 0) r.push_back(x);
      raw.push_back(r);
    }
    auto s = testkit::uniform(n, raw);
    for (const auto& level : {Rational(1, 8), Rational(1, 4), Rational(1, 2)}) {
      const std::optional<Rational> ceiling = seed % 2 ? std::optional<Rational>(Rational(1, 2)) : std::nullopt;
      auto g = greedy_packing(s, level, ceiling, seed);
      auto e = max_packing_exact(s, level, ceiling);
      CHECK(verify_packing(s, g).ok());
      CHECK(verify_packing(s, e).ok());
      CHECK(g.size() <= e.size());
      auto cert = haussler_certificate(s, e);
      CHECK(cert.margin >= 0);
    }
  }
}

TEST_CASE("verify_packing detects violations") {
  auto s = testkit::uniform(4, Raw{{0}, {0, 1}, {2, 3}});
  Packing p;
  p.level = Rational(1, 2);
  p.members = {0, 1};
  CHECK_FALSE(verify_packing(s, p).separated);
  p.members = {0};
  CHECK_FALSE(verify_packing(s, p).maximal);
  p.members = {0, 2};
  p.ceiling = Rational(1, 4);
  CHECK_FALSE(verify_packing(s, p).within_ceiling);
}

TEST_CASE("haussler bound values") {
  const long double e = std::exp(1.0L);
  CHECK(static_cast<double>(haussler_bound(1, Rational(1, 2))) == doctest::Approx(static_cast<double>(8 * e * e)).epsilon(1e-12));
  CHECK(static_cast<double>(haussler_bound(1, Rational(1))) == doctest::Approx(static_cast<double>(4 * e * e)).epsilon(1e-12));
  CHECK(static_cast<double>(haussler_bound(1, Rational(1))) == doctest::Approx(29.556).epsilon(1e-4));
  CHECK(static_cast<double>(haussler_bound(1, Rational(1, 4))) == doctest::Approx(118.22).epsilon(1e-4));
  auto cert = haussler_certificate(testkit::singletons(8, 4), max_packing_exact(testkit::singletons(8, 4), Rational(1, 4), std::nullopt));
  CHECK(cert.d == 1);
  CHECK(cert.size == 4);

  Packing fake;
  fake.level = Rational(1);
  fake.members.resize(40);
  CHECK_THROWS_AS(haussler_certificate(testkit::singletons(8, 4), fake, 1), TheoremViolation);
}

TEST_CASE("delta optimisation at d/(d+1)") {
  CHECK(haussler_delta_factor(1) == Rational(4));
  CHECK(haussler_delta_factor(2) == Rational(27, 4));
  CHECK(haussler_delta_factor(3) == Rational(256, 27));
  const long double e = std::exp(1.0L);
  for (std::size_t d = 1; d <= 3; ++d) {
    CHECK(haussler_delta_is_stationary(d));
    const long double dd = static_cast<long double>(d);
    CHECK(haussler_delta_factor(d).to_long_double() < e * (dd + 1));
    const long double at = haussler_delta_objective(d, 0.25L, dd / (dd + 1));
    CHECK(static_cast<double>(at) ==
          doctest::Approx(static_cast<double>(haussler_delta_factor(d).to_long_double() * std::pow(8 * e, dd))).epsilon(1e-12));
    for (long double delta = 0.05L; delta < 1; delta += 0.05L) CHECK(haussler_delta_objective(d, 0.25L, delta) >= at * (1 - 1e-12L));
  }
}

TEST_CASE("lemma 4 sample size and projection counts") {
  CHECK(lemma4_sample_size(1, Rational(1, 4), Rational(1, 2)) == 16);
  CHECK(lemma4_sample_size(2, Rational(1, 3), Rational(1, 4)) == 48);
  CHECK(lemma4_sample_size(1, Rational(1, 3), Rational(2, 7)) == 21);

  auto four = testkit::singletons(8, 4);
  const std::vector<std::size_t> all{0, 1, 2, 3};
  const std::vector<std::size_t> one{2};
  CHECK(projection_count_estimate(four, one, 5, 200, 1).mean == 1.0);
  auto big = projection_count_estimate(four, all, 400, 200, 1);
  CHECK(big.mean == 4.0);
  auto est = projection_count_estimate(four, all, 16, 10000, 9);
  CHECK(4.0 <= (est.mean + 3 * est.standard_error) / 0.5);
  auto again = projection_count_estimate(four, all, 16, 10000, 9);
  CHECK(again.mean == est.mean);
}

TEST_CASE("dudley-style shape") {
  const long double e = std::exp(1.0L);
  CHECK(static_cast<double>(dudley_style_bound(1, 1 / e)) == doctest::Approx(static_cast<double>(e)));
  CHECK(static_cast<double>(dudley_style_bound(2, 1 / e)) == doctest::Approx(static_cast<double>(e * e)));
  long double previous = dudley_style_bound(2, 0.01L);
  for (long double eps = 0.02L; eps < 1 / e; eps += 0.01L) {
    const long double v = dudley_style_bound(2, eps);
    CHECK(v < previous);
    previous = v;
  }
}
