#include "epsnet/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "epsnet/generators.hpp"
#include "epsnet/parallel.hpp"
#include "epsnet/random.hpp"

namespace epsnet {

namespace {

std::size_t get_size(const json& doc, const char* key, std::size_t fallback) {
  if (!doc.contains(key)) return fallback;
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw std::invalid_argument(std::string("field \"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::size_t require_size(const json& doc, const char* key) {
  if (!doc.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return get_size(doc, key, 0);
}

std::string decimal(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

double rounded(long double x) { return static_cast<double>(std::round(x * 1e6L) / 1e6L); }

Coordinates coordinates_from_json(const json& points) {
  if (!points.is_array()) throw std::invalid_argument("\"points\" must be an array of coordinate lists");
  Coordinates out;
  for (const auto& p : points) {
    if (!p.is_array()) throw std::invalid_argument("\"points\" must be an array of coordinate lists");
    std::vector<std::int64_t> row;
    for (const auto& c : p) {
      if (!c.is_number_integer()) throw std::invalid_argument("coordinates must be integers");
      row.push_back(c.get<std::int64_t>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

MethodConstants constants_for(const ExperimentConfig& config, const std::string& label) {
  MethodConstants c;
  const auto it = config.C.find(label);
  c.C = it == config.C.end() ? config.default_C : it->second;
  c.delta = config.delta;
  c.max_retries = config.max_retries;
  c.cal_budget = config.cal_budget;
  c.cal_draw_cap = config.cal_draw_cap;
  c.exact_cap = config.context.exact_cap;
  return c;
}

std::string doubling_value(const DoublingResult& d) {
  return d.exact ? std::to_string(d.lower) : decimal(d.upper);
}

}  // namespace

RangeSpace generate_instance(const json& spec) {
  if (!spec.is_object() || !spec.contains("kind") || !spec.at("kind").is_string())
    throw std::invalid_argument("generator spec needs a string \"kind\"");
  const std::string kind = spec.at("kind").get<std::string>();
  const std::string name = spec.value("name", std::string{});
  if (kind == "lower-bound") {
    const LowerBoundParams p{require_size(spec, "k"), require_size(spec, "d"), require_size(spec, "l"),
                             require_size(spec, "m")};
    auto space = gen_lower_bound_family(p, get_size(spec, "cap", 100'000));
    return name.empty() ? space : space.with_name(name);
  }
  if (kind == "random") {
    RandomSpec r;
    r.n = require_size(spec, "n");
    r.num_ranges = require_size(spec, "num_ranges");
    if (spec.contains("size_law")) {
      const auto law = parse_size_law(spec.at("size_law").get<std::string>());
      if (!law) throw std::invalid_argument("unknown size_law");
      r.size_law = *law;
    }
    r.fixed_size = get_size(spec, "fixed_size", 1);
    if (spec.contains("weight_law")) {
      const auto law = parse_weight_law(spec.at("weight_law").get<std::string>());
      if (!law) throw std::invalid_argument("unknown weight_law");
      r.weight_law = *law;
    }
    r.w_max = static_cast<std::int64_t>(get_size(spec, "w_max", 1));
    return gen_random(r, get_size(spec, "seed", 0), name);
  }
  const auto geometry = parse_geometry_kind(kind);
  if (!geometry) throw std::invalid_argument("unknown generator kind \"" + kind + "\"");
  Coordinates points;
  if (spec.contains("points")) {
    points = coordinates_from_json(spec.at("points"));
  } else if (spec.contains("random_points")) {
    points = random_points(get_size(spec, "random_points", 0), geometry_dimension(*geometry),
                           static_cast<std::int64_t>(get_size(spec, "coord_max", 1000)), get_size(spec, "seed", 0));
  } else {
    throw std::invalid_argument("geometric spec needs \"points\" or \"random_points\"");
  }
  std::vector<std::int64_t> weights;
  if (spec.contains("weights")) weights = spec.at("weights").get<std::vector<std::int64_t>>();
  return gen_geometric(*geometry, points, std::move(weights), name);
}

RangeSpace resolve_instance(const json& entry, const std::filesystem::path& base_dir) {
  if (entry.is_string()) return load_instance(base_dir / entry.get<std::string>());
  if (!entry.is_object()) throw std::invalid_argument("instance entry must be an object or a file name");
  if (entry.contains("file")) return load_instance(base_dir / entry.at("file").get<std::string>());
  if (entry.contains("inline")) return range_space_from_json(entry.at("inline"));
  if (entry.contains("generate")) return generate_instance(entry.at("generate"));
  throw std::invalid_argument("instance entry needs \"file\", \"inline\" or \"generate\"");
}

std::optional<MethodChoice> parse_method_choice(std::string_view text) {
  MethodChoice c;
  c.label = std::string(text);
  if (text == "iid-capacity") {
    c.method = NetMethod::iid;
    c.sizing = IidSizing::capacity;
    return c;
  }
  const auto m = parse_net_method(text);
  if (!m || *m == NetMethod::given) return std::nullopt;
  c.method = *m;
  return c;
}

InstanceContext analyse_instance(const RangeSpace& space, const Rational& eps, const ContextOptions& options) {
  InstanceContext ctx;
  ctx.d = sizing_dimension(space);
  ctx.tau = alexander_capacity(space, eps);
  ctx.tau_vec = capacity_vector(space, eps);
  DoublingOptions dopts{DoublingMode::automatic, options.doubling_cap, 0, std::nullopt};
  if (ctx.d.exact) dopts.d = ctx.d.d;
  ctx.doubling = doubling_constant(space, eps, dopts);
  if (options.min_net_oracle) {
    try {
      ctx.min_net = min_net_exact(space, eps, options.exact_cap).size();
    } catch (const CapExceeded&) {
    }
  }
  return ctx;
}

NetReport run_method(const RangeSpace& space, const Rational& eps, const MethodChoice& method, std::uint64_t seed,
                     const MethodConstants& constants, const InstanceContext& context) {
  const std::size_t d = context.d.d;
  NetReport r;
  switch (method.method) {
    case NetMethod::iid:
      r = iid_net(space, eps, constants.delta, method.sizing, constants.C, seed, d);
      break;
    case NetMethod::stratified:
      r = stratified_net(space, eps, constants.C, seed, constants.max_retries, d);
      break;
    case NetMethod::doubling:
      r = doubling_net(space, eps, constants.C, seed, d, context.doubling);
      break;
    case NetMethod::doubling_small:
      r = doubling_net_small_d(space, eps, constants.C, seed, d, context.doubling);
      break;
    case NetMethod::cal:
      r = cal_net(space, eps, constants.cal_budget.value_or(space.range_count()), seed, constants.cal_draw_cap);
      break;
    case NetMethod::greedy:
      r = greedy_net(space, eps);
      break;
    case NetMethod::exact:
      r = min_net_exact(space, eps, constants.exact_cap);
      break;
    case NetMethod::given:
      throw std::invalid_argument("\"given\" is not a construction");
  }
  r.stats.seed = seed;
  r.stats.d_exact = context.d.exact;
  return r;
}

std::uint64_t tau_vector_hash(const CapacityVector& v) {
  std::string text;
  for (std::size_t i = 0; i < v.tau.size(); ++i) {
    if (i) text += ';';
    text += v.tau[i].str();
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ExperimentConfig parse_experiment_config(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw std::invalid_argument("experiment config must be a JSON object");
  try {
    ExperimentConfig c;
    c.base_dir = base_dir;
    if (!doc.contains("instances") || !doc.at("instances").is_array())
      throw std::invalid_argument("config needs an \"instances\" array");
    for (const auto& e : doc.at("instances")) c.instances.push_back(e);
    if (!doc.contains("eps") || !doc.at("eps").is_array()) throw std::invalid_argument("config needs an \"eps\" array");
    for (const auto& e : doc.at("eps")) {
      const Rational eps = rational_from_json(e);
      if (!eps.is_positive() || Rational(1) < eps) throw std::invalid_argument("eps must lie in (0, 1]");
      c.eps.push_back(eps);
    }
    if (doc.contains("methods")) {
      for (const auto& m : doc.at("methods")) {
        const auto label = m.get<std::string>();
        if (!parse_method_choice(label)) throw std::invalid_argument("unknown method \"" + label + "\"");
        c.methods.push_back(label);
      }
    }
    if (doc.contains("seeds")) {
      c.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
    } else if (doc.contains("trials")) {
      c.seeds.clear();
      for (std::size_t s = 0, t = get_size(doc, "trials", 1); s < t; ++s) c.seeds.push_back(s);
    }
    if (doc.contains("C")) {
      const auto& C = doc.at("C");
      if (C.is_number()) {
        c.default_C = C.get<double>();
      } else if (C.is_object()) {
        for (const auto& [k, v] : C.items()) {
          if (k == "default")
            c.default_C = v.get<double>();
          else
            c.C[k] = v.get<double>();
        }
      } else {
        throw std::invalid_argument("\"C\" must be a number or an object of per-method numbers");
      }
    }
    if (doc.contains("delta")) c.delta = rational_from_json(doc.at("delta"));
    c.max_retries = get_size(doc, "max_retries", c.max_retries);
    if (doc.contains("cal_budget")) c.cal_budget = get_size(doc, "cal_budget", 0);
    c.cal_draw_cap = get_size(doc, "cal_draw_cap", c.cal_draw_cap);
    if (doc.contains("caps")) {
      const auto& caps = doc.at("caps");
      c.context.doubling_cap = get_size(caps, "doubling", c.context.doubling_cap);
      c.context.exact_cap = get_size(caps, "exact", c.context.exact_cap);
    }
    c.context.min_net_oracle = doc.value("min_net_oracle", true);
    c.timing = doc.value("timing", false);
    if (doc.contains("output")) {
      const auto& out = doc.at("output");
      if (out.contains("csv")) c.csv_path = base_dir / out.at("csv").get<std::string>();
      if (out.contains("summary")) c.summary_path = base_dir / out.at("summary").get<std::string>();
    }
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed experiment config: ") + e.what());
  }
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return parse_experiment_config(doc, path.parent_path());
}

std::string csv_header() {
  return "instance,eps,method,seed,net_size,is_net,draws,tau,tau_vec_hash,D_eps,D_mode,d,min_net,"
         "bound_stratified,bound_capacity,bound_doubling,bound_doubling_small,wall_time,error\n";
}

std::string to_csv(const ResultRow& row) {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(row.tau_vec_hash));
  std::string s;
  s += csv_field(row.instance) + ',';
  s += row.eps.str() + ',';
  s += csv_field(row.method) + ',';
  s += std::to_string(row.seed) + ',';
  s += std::to_string(row.net_size) + ',';
  s += std::string(row.is_net ? "true" : "false") + ',';
  s += std::to_string(row.draws) + ',';
  s += row.tau.str() + ',';
  s += std::string(hash) + ',';
  s += doubling_value(row.doubling) + ',';
  s += std::string(row.doubling.exact ? "exact" : "bracket") + ',';
  s += std::to_string(row.d) + ',';
  s += (row.min_net ? std::to_string(*row.min_net) : std::string("NA")) + ',';
  s += decimal(row.bound_stratified) + ',';
  s += decimal(row.bound_capacity) + ',';
  s += decimal(row.bound_doubling) + ',';
  s += decimal(row.bound_doubling_small) + ',';
  s += (row.wall_time ? decimal(*row.wall_time) : std::string("NA")) + ',';
  s += csv_field(row.error) + '\n';
  return s;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  std::vector<RangeSpace> spaces;
  for (const auto& entry : config.instances) spaces.push_back(resolve_instance(entry, config.base_dir));
  std::vector<MethodChoice> methods;
  for (const auto& label : config.methods) {
    const auto m = parse_method_choice(label);
    if (!m) throw std::invalid_argument("unknown method \"" + label + "\"");
    methods.push_back(*m);
  }

  ExperimentResult result;
  const std::size_t pairs = spaces.size() * config.eps.size();
  std::vector<std::optional<InstanceContext>> contexts(pairs);
  std::vector<std::string> context_errors(pairs);
  const std::size_t per_pair = methods.size() * config.seeds.size();
  if (per_pair > 0) {
    parallel_for(pairs, [&](std::size_t p) {
      try {
        contexts[p] = analyse_instance(spaces[p / config.eps.size()], config.eps[p % config.eps.size()],
                                       config.context);
      } catch (const std::exception& e) {
        context_errors[p] = e.what();
      }
    });
  }

  result.rows.resize(pairs * per_pair);
  parallel_for(result.rows.size(), [&](std::size_t idx) {
    const std::size_t p = idx / per_pair;
    const std::size_t rest = idx % per_pair;
    const RangeSpace& space = spaces[p / config.eps.size()];
    const Rational& eps = config.eps[p % config.eps.size()];
    const MethodChoice& method = methods[rest / config.seeds.size()];
    const std::uint64_t seed = config.seeds[rest % config.seeds.size()];

    ResultRow& row = result.rows[idx];
    row.instance = space.name();
    row.eps = eps;
    row.method = method.label;
    row.seed = seed;
    if (!contexts[p]) {
      row.error = context_errors[p];
      return;
    }
    const InstanceContext& ctx = *contexts[p];
    const MethodConstants constants = constants_for(config, method.label);
    row.tau = ctx.tau;
    row.tau_vec_hash = tau_vector_hash(ctx.tau_vec);
    row.doubling = ctx.doubling;
    row.d = ctx.d.d;
    row.min_net = ctx.min_net;
    const long double C = constants.C;
    const long double D = ctx.doubling.value_for_sizing();
    row.bound_stratified = C * bound_stratified(ctx.d.d, ctx.tau_vec);
    row.bound_capacity = C * bound_capacity(ctx.d.d, ctx.tau, ctx.tau_vec.z);
    row.bound_doubling = C * bound_doubling(ctx.d.d, D, ctx.tau_vec);
    row.bound_doubling_small = C * bound_doubling_small(ctx.d.d, D, eps);
    const auto start = std::chrono::steady_clock::now();
    try {
      const NetReport r = run_method(space, eps, method, seed, constants, ctx);
      row.net_size = r.size();
      row.is_net = r.is_net;
      row.draws = r.stats.draws;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    if (config.timing)
      row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });

  result.csv = csv_header();
  for (const auto& row : result.rows) result.csv += to_csv(row);

  json summary;
  summary["schema"] = kResultSchema;
  summary["prng"] = std::string(kPrngName);
  summary["rows"] = result.rows.size();
  json per_method = json::object();
  const std::pair<const char*, long double ResultRow::*> bounds[] = {{"stratified", &ResultRow::bound_stratified},
                                                                      {"capacity", &ResultRow::bound_capacity},
                                                                      {"doubling", &ResultRow::bound_doubling},
                                                                      {"doubling-small", &ResultRow::bound_doubling_small}};
  for (const auto& method : methods) {
    std::size_t runs = 0, errors = 0, successes = 0;
    std::vector<long double> sum(4, 0), worst(4, 0);
    std::vector<std::size_t> counted(4, 0);
    for (const auto& row : result.rows) {
      if (row.method != method.label) continue;
      ++runs;
      if (!row.error.empty()) {
        ++errors;
        continue;
      }
      successes += row.is_net;
      for (std::size_t b = 0; b < 4; ++b) {
        const long double bound = row.*(bounds[b].second);
        if (bound <= 0) continue;
        const long double ratio = static_cast<long double>(row.net_size) / bound;
        sum[b] += ratio;
        worst[b] = std::max(worst[b], ratio);
        ++counted[b];
      }
    }
    json m;
    m["runs"] = runs;
    m["errors"] = errors;
    m["successes"] = successes;
    m["success_rate"] = runs ? json(rounded(static_cast<long double>(successes) / runs)) : json(nullptr);
    json ratios;
    for (std::size_t b = 0; b < 4; ++b)
      ratios[bounds[b].first] = counted[b] ? json{{"mean", rounded(sum[b] / counted[b])}, {"max", rounded(worst[b])}}
                                           : json(nullptr);
    m["size_to_bound"] = std::move(ratios);
    per_method[method.label] = std::move(m);
  }
  summary["methods"] = std::move(per_method);
  result.summary = std::move(summary);
  return result;
}

NetReport replay(const ExperimentConfig& config, std::string_view instance, const Rational& eps,
                 std::string_view method, std::uint64_t seed) {
  const auto choice = parse_method_choice(method);
  if (!choice) throw std::invalid_argument("unknown method \"" + std::string(method) + "\"");
  for (const auto& entry : config.instances) {
    const RangeSpace space = resolve_instance(entry, config.base_dir);
    if (space.name() != instance) continue;
    ContextOptions options = config.context;
    options.min_net_oracle = false;
    const auto ctx = analyse_instance(space, eps, options);
    return run_method(space, eps, *choice, seed, constants_for(config, choice->label), ctx);
  }
  throw std::invalid_argument("no instance named \"" + std::string(instance) + "\"");
}

}  // namespace epsnet
