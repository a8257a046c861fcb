#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "epsnet/experiment.hpp"
#include "epsnet/generators.hpp"
#include "helpers.hpp"

using namespace epsnet;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t field_count(const std::string& line) {
  return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
}

json small_config() {
  return json::parse(R"({
    "instances": [
      {"inline": {"name": "lb", "n": 5, "weights": [1,1,1,1,1], "ranges": [[0],[1],[2,3],[2,4],[3,4]]}},
      {"generate": {"kind": "intervals", "random_points": 12, "coord_max": 50, "seed": 3, "name": "iv"}},
      {"generate": {"kind": "random", "n": 10, "num_ranges": 20, "weight_law": "uniform", "w_max": 4, "seed": 5}}
    ],
    "eps": ["1/5", "1/8"],
    "methods": ["iid", "iid-capacity", "stratified", "doubling", "doubling-small", "cal", "greedy", "exact"],
    "seeds": [0, 1],
    "C": {"default": 8, "iid": 4}
  })");
}

}  // namespace

TEST_CASE("method labels") {
  CHECK(parse_method_choice("iid-capacity")->sizing == IidSizing::capacity);
  CHECK(parse_method_choice("doubling-small")->method == NetMethod::doubling_small);
  CHECK_FALSE(parse_method_choice("given").has_value());
  CHECK_FALSE(parse_method_choice("magic").has_value());
}

TEST_CASE("empty method list gives a header-only csv") {
  auto doc = small_config();
  doc["methods"] = json::array();
  const auto r = run_experiment(parse_experiment_config(doc, "."));
  CHECK(r.csv == csv_header());
  CHECK(r.rows.empty());
  CHECK(r.summary["schema"] == 1);
}

TEST_CASE("greedy never beats exact") {
  auto doc = small_config();
  doc["instances"] = json::array({doc["instances"][1]});
  doc["eps"] = json::array({"1/4"});
  doc["methods"] = json::array({"greedy", "exact"});
  doc["seeds"] = json::array({0});
  const auto r = run_experiment(parse_experiment_config(doc, "."));
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].is_net);
  CHECK(r.rows[1].is_net);
  CHECK(r.rows[0].net_size >= r.rows[1].net_size);
  CHECK(r.rows[1].min_net == r.rows[1].net_size);
  CHECK(lines(r.csv).size() == 3);
}

TEST_CASE("lower-bound sweep reaches l m d") {
  // eps = k / n differs per instance
  for (std::size_t m = 2; m <= 4; ++m) {
    const LowerBoundParams p{1, 2, 1, m};
    const auto space = gen_lower_bound_family(p);
    const auto ctx = analyse_instance(space, lower_bound_eps(p));
    REQUIRE(ctx.min_net.has_value());
    CHECK(*ctx.min_net == 2 * m);
    const auto r = run_method(space, lower_bound_eps(p), *parse_method_choice("exact"), 0, {}, ctx);
    CHECK(r.is_net);
    CHECK(r.size() == 2 * m);
  }
}

TEST_CASE("experiment is deterministic and rows replay") {
  const auto config = parse_experiment_config(small_config(), ".");
  const auto a = run_experiment(config);
  const auto b = run_experiment(config);
  CHECK(a.csv == b.csv);
  CHECK(a.summary.dump() == b.summary.dump());
  CHECK(a.rows.size() == 3 * 2 * 8 * 2);
  CHECK(lines(a.csv).size() == a.rows.size() + 1);
  for (const auto& line : lines(a.csv)) CHECK(field_count(line) == 19);

  for (const auto& row : a.rows) {
    CHECK(row.error.empty());
    if (!row.is_net) continue;
    const auto again = replay(config, row.instance, row.eps, row.method, row.seed);
    CHECK(again.is_net);
    CHECK(again.size() == row.net_size);
  }
  for (const auto& row : a.rows)
    if (row.method != "iid" && row.method != "iid-capacity") CHECK(row.is_net);
  CHECK(a.summary["methods"]["exact"]["success_rate"] == 1.0);
  CHECK(a.summary["prng"] == std::string(kPrngName));
}

TEST_CASE("per-run failures stay in the row") {
  auto doc = small_config();
  doc["instances"] = json::array({doc["instances"][0]});
  doc["eps"] = json::array({"1/5"});
  doc["methods"] = json::array({"exact", "greedy"});
  doc["caps"] = json{{"exact", 1}};
  const auto r = run_experiment(parse_experiment_config(doc, "."));
  REQUIRE(r.rows.size() == 4);
  CHECK_FALSE(r.rows[0].error.empty());
  CHECK(r.rows[2].error.empty());
  CHECK(r.rows[2].is_net);
  CHECK(r.summary["methods"]["exact"]["errors"] == 2);
}

TEST_CASE("config validation") {
  auto doc = small_config();
  doc["methods"] = json::array({"nope"});
  CHECK_THROWS_AS(parse_experiment_config(doc, "."), std::invalid_argument);
  doc = small_config();
  doc["eps"] = json::array({"3/2"});
  CHECK_THROWS_AS(parse_experiment_config(doc, "."), std::invalid_argument);
  doc = small_config();
  doc["seeds"] = "x";
  CHECK_THROWS_AS(parse_experiment_config(doc, "."), std::invalid_argument);
  doc = small_config();
  doc.erase("seeds");
  doc["trials"] = 3;
  CHECK(parse_experiment_config(doc, ".").seeds == std::vector<std::uint64_t>{0, 1, 2});
  CHECK_THROWS_AS(generate_instance(json{{"kind", "balls"}}), std::invalid_argument);
}

TEST_CASE("tau vector hash") {
  CapacityVector v;
  v.z = 2;
  v.tau = {Rational(1), Rational(3, 2)};
  // FNV-1a of "1/1;3/2"
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : std::string("1/1;3/2")) h = (h ^ c) * 0x100000001b3ULL;
  CHECK(tau_vector_hash(v) == h);
  CHECK(tau_vector_hash(CapacityVector{}) == 0xcbf29ce484222325ULL);
}
