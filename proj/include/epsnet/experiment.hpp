#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epsnet/complexity.hpp"
#include "epsnet/io.hpp"
#include "epsnet/nets.hpp"

namespace epsnet {

/// Builds an instance from a generator spec:
///   {"kind": "lower-bound", "k", "d", "l", "m"}
///   {"kind": "intervals" | "halfplanes" | "disks" | "halfspaces3d",
///    "points": [[x, ...], ...] or "random_points": count, "coord_max", "seed"}
///   {"kind": "random", "n", "num_ranges", "size_law", "fixed_size",
///    "weight_law", "w_max", "seed"}
/// with an optional "name".
RangeSpace generate_instance(const json& spec);

/// An instance entry of an experiment config: {"file": path} (relative to
/// base_dir), {"inline": instance} or {"generate": spec}.
RangeSpace resolve_instance(const json& entry, const std::filesystem::path& base_dir);

/// A construction as named in configs and on the command line: the net
/// methods plus "iid-capacity" for i.i.d. sampling with capacity sizing.
struct MethodChoice {
  NetMethod method = NetMethod::greedy;
  IidSizing sizing = IidSizing::vc;
  std::string label;
};

std::optional<MethodChoice> parse_method_choice(std::string_view text);

struct MethodConstants {
  double C = 8.0;
  Rational delta{1, 10};
  std::size_t max_retries = 8;
  /// CAL label budget; the number of ranges when unset
  std::optional<std::size_t> cal_budget;
  std::size_t cal_draw_cap = 1'000'000;
  std::size_t exact_cap = 2000;
};

/// Quantities shared by every run on one (instance, eps) pair.
struct InstanceContext {
  VcDimension d;
  Rational tau;
  CapacityVector tau_vec;
  DoublingResult doubling;
  /// exact minimum net size, when the oracle ran within its cap
  std::optional<std::size_t> min_net;
};

struct ContextOptions {
  std::size_t doubling_cap = 2000;
  std::size_t exact_cap = 2000;
  bool min_net_oracle = true;
};

InstanceContext analyse_instance(const RangeSpace& space, const Rational& eps, const ContextOptions& options = {});

/// Runs one construction with the context's d and D.
NetReport run_method(const RangeSpace& space, const Rational& eps, const MethodChoice& method, std::uint64_t seed,
                     const MethodConstants& constants, const InstanceContext& context);

/// FNV-1a (64-bit) of the tau vector written as "a/b" entries joined by ';'.
std::uint64_t tau_vector_hash(const CapacityVector& v);

struct ExperimentConfig {
  std::vector<json> instances;
  std::filesystem::path base_dir;
  std::vector<Rational> eps;
  std::vector<std::string> methods;
  std::vector<std::uint64_t> seeds{0};
  /// per-method C, falling back to default_C
  std::map<std::string, double> C;
  double default_C = 8.0;
  Rational delta{1, 10};
  std::size_t max_retries = 8;
  std::optional<std::size_t> cal_budget;
  std::size_t cal_draw_cap = 1'000'000;
  ContextOptions context;
  /// record wall time per row (breaks byte-identical output)
  bool timing = false;
  std::optional<std::filesystem::path> csv_path;
  std::optional<std::filesystem::path> summary_path;
};

/// Parses the config document; relative paths resolve against base_dir.
/// Throws std::invalid_argument on malformed fields or unknown methods.
ExperimentConfig parse_experiment_config(const json& doc, const std::filesystem::path& base_dir);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct ResultRow {
  std::string instance;
  Rational eps;
  std::string method;
  std::uint64_t seed = 0;
  std::size_t net_size = 0;
  bool is_net = false;
  std::size_t draws = 0;
  Rational tau;
  std::uint64_t tau_vec_hash = 0;
  DoublingResult doubling;
  std::size_t d = 0;
  std::optional<std::size_t> min_net;
  long double bound_stratified = 0;
  long double bound_capacity = 0;
  long double bound_doubling = 0;
  long double bound_doubling_small = 0;
  std::optional<double> wall_time;
  /// empty unless the run failed
  std::string error;
};

inline constexpr int kResultSchema = 1;

std::string csv_header();
std::string to_csv(const ResultRow& row);

struct ExperimentResult {
  std::vector<ResultRow> rows;
  std::string csv;
  json summary;
};

/// Runs instance x eps x method x seed; rows are computed in parallel and
/// emitted in config order. Failures are recorded in the row's error field.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Re-runs the construction behind one row, identified by instance name,
/// eps, method label and seed. Throws std::invalid_argument when the config
/// has no such instance or method.
NetReport replay(const ExperimentConfig& config, std::string_view instance, const Rational& eps,
                 std::string_view method, std::uint64_t seed);

}  // namespace epsnet
