#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "epsnet/complexity.hpp"
#include "epsnet/experiment.hpp"
#include "epsnet/generators.hpp"
#include "epsnet/io.hpp"
#include "epsnet/nets.hpp"
#include "epsnet/one_inclusion.hpp"
#include "epsnet/packing.hpp"
#include "epsnet/random.hpp"
#include "epsnet/report.hpp"

using namespace epsnet;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
}

void emit(const json& doc, const std::string& out) { emit(doc.dump(2) + "\n", out); }

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    const auto comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos)
      throw std::invalid_argument("malformed index list \"" + text + "\"");
    out.push_back(std::stoull(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::pair<std::size_t, std::size_t> parse_pair(const std::string& text) {
  const auto parts = parse_index_list(text);
  if (parts.size() != 2) throw std::invalid_argument("expected \"y,l\", got \"" + text + "\"");
  return {parts[0], parts[1]};
}

Rational eps_arg(const std::string& text) {
  const Rational eps = parse_rational(text);
  if (!eps.is_positive() || Rational(1) < eps) throw std::invalid_argument("eps must lie in (0, 1]");
  return eps;
}

struct GenArgs {
  std::string kind;
  std::string name;
  std::size_t k = 1, d = 1, l = 1, m = 1;
  std::string points_file;
  std::size_t random_points = 0;
  std::int64_t coord_max = 1000;
  std::size_t n = 0;
  std::size_t num_ranges = 0;
  std::string size_law = "uniform";
  std::size_t fixed_size = 1;
  std::string weight_law = "ones";
  std::int64_t w_max = 1;
  std::uint64_t seed = 0;
  std::uint64_t cap = 100'000;
  std::string out;
};

int run_gen(const GenArgs& a) {
  json spec{{"kind", a.kind}};
  if (!a.name.empty()) spec["name"] = a.name;
  if (a.kind == "lower-bound") {
    spec.update(json{{"k", a.k}, {"d", a.d}, {"l", a.l}, {"m", a.m}, {"cap", a.cap}});
  } else if (a.kind == "random") {
    if (a.n == 0) throw std::invalid_argument("--n is required for random instances");
    spec.update(json{{"n", a.n},
                     {"num_ranges", a.num_ranges},
                     {"size_law", a.size_law},
                     {"fixed_size", a.fixed_size},
                     {"weight_law", a.weight_law},
                     {"w_max", a.w_max},
                     {"seed", a.seed}});
  } else if (!a.points_file.empty()) {
    spec["points"] = parse_points_csv(read_text_file(a.points_file));
  } else if (a.random_points > 0) {
    spec.update(json{{"random_points", a.random_points}, {"coord_max", a.coord_max}, {"seed", a.seed}});
  } else {
    throw std::invalid_argument("geometric kinds need --points-file or --random-points");
  }
  const RangeSpace space = generate_instance(spec);
  emit(to_json(space).dump() + "\n", a.out);
  std::cerr << space.name() << " n=" << space.size() << " ranges=" << space.range_count() << "\n";
  return kOk;
}

struct ProfileArgs {
  std::string instance;
  std::string eps;
  std::vector<std::size_t> pi;
  std::vector<std::string> phi;
  std::string doubling = "auto";
  std::size_t doubling_cap = 2000;
  std::uint64_t seed = 0;
  std::string out;
};

int run_profile(const ProfileArgs& a) {
  const RangeSpace space = load_instance(a.instance);
  ProfileOptions opts;
  opts.pi_at = a.pi;
  for (const auto& p : a.phi) opts.phi_at.push_back(parse_pair(p));
  opts.vc.seed = a.seed;
  opts.enumeration.seed = a.seed;
  opts.doubling.mode = a.doubling == "exact"   ? DoublingMode::exact
                       : a.doubling == "bracket" ? DoublingMode::bracket
                                                 : DoublingMode::automatic;
  opts.doubling.cap = a.doubling_cap;
  opts.doubling.seed = a.seed;
  const auto profile = compute_profile(space, eps_arg(a.eps), opts);
  json doc{{"instance", space.name()}};
  doc.update(to_json(profile));
  emit(doc, a.out);
  std::cerr << "d=" << profile.d.d << (profile.d.exact ? "" : "+") << " tau=" << profile.tau
            << " D=" << profile.doubling.lower << (profile.doubling.exact ? "" : "..") << "\n";
  return kOk;
}

struct PackArgs {
  std::string instance;
  std::string level;
  std::string ceiling;
  std::string mode = "greedy";
  std::uint64_t seed = 0;
  std::size_t cap = 2000;
  bool haussler = false;
  std::string out;
};

int run_pack(const PackArgs& a) {
  const RangeSpace space = load_instance(a.instance);
  const Rational level = parse_rational(a.level);
  std::optional<Rational> ceiling;
  if (!a.ceiling.empty()) ceiling = parse_rational(a.ceiling);
  const Packing p = a.mode == "exact" ? max_packing_exact(space, level, ceiling, a.cap)
                                      : greedy_packing(space, level, ceiling, a.seed);
  const PackingCheck check = verify_packing(space, p);
  std::optional<HausslerReport> h;
  if (a.haussler) h = haussler_certificate(space, p);
  emit(to_json(p, check, h), a.out);
  std::cerr << p.size() << " " << p.level << " " << to_string(p.certificate) << "\n";
  return check.ok() ? kOk : kFailed;
}

struct OigArgs {
  std::string instance;
  std::string sample;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> d;
  std::optional<std::size_t> target;
  std::string out;
};

int run_oig(const OigArgs& a) {
  const RangeSpace space = load_instance(a.instance);
  std::vector<std::size_t> sample;
  if (!a.sample.empty()) {
    sample = parse_index_list(a.sample);
    for (auto x : sample)
      if (x >= space.size()) throw std::invalid_argument("sample point " + std::to_string(x) + " outside the ground set");
  } else {
    if (a.sample_size == 0) throw std::invalid_argument("give --sample or --sample-size");
    const WeightedSampler sampler(space.weights());
    Rng rng(a.seed);
    for (std::size_t i = 0; i < a.sample_size; ++i) sample.push_back(sampler.draw(rng));
  }
  const auto family = classifier_family(space);
  const auto graph = build_oig(family, sample);
  const std::size_t d = a.d ? *a.d : vc_dimension(space).d;
  const auto orientation = orient_bounded(graph, d);

  json doc;
  doc["instance"] = space.name();
  doc["sample"] = sample;
  doc["d"] = d;
  json vertices = json::array();
  for (const auto& v : graph.vertices) vertices.push_back(v.indices());
  doc["vertices"] = std::move(vertices);
  json edges = json::array();
  for (std::size_t e = 0; e < graph.edges.size(); ++e)
    edges.push_back(json{{"u", graph.edges[e].first}, {"v", graph.edges[e].second}, {"position", graph.edge_position[e]}});
  doc["edges"] = std::move(edges);
  if (!orientation) {
    doc["orientation"] = nullptr;
    emit(doc, a.out);
    std::cerr << "no orientation with out-degree <= " << d << "\n";
    return kFailed;
  }
  doc["orientation"] = json{{"bound", orientation->bound}, {"tail", orientation->tail}};
  const PointSet f_star =
      a.target ? restrict_to_sample(space.range(*a.target), sample) : PointSet(sample.size());
  const auto loo = loo_error(graph, *orientation, f_star);
  doc["loo"] = json{{"target", a.target ? json(*a.target) : json(nullptr)},
                    {"mistakes", loo.mistakes},
                    {"positions", loo.positions},
                    {"error", to_json(loo.error)}};
  emit(doc, a.out);
  std::cerr << "vertices=" << graph.vertices.size() << " edges=" << graph.edges.size() << " loo=" << loo.error
            << " (bound " << Rational(static_cast<std::int64_t>(d), static_cast<std::int64_t>(sample.size()))
            << ")\n";
  return kOk;
}

struct NetArgs {
  std::string instance;
  std::string method;
  std::string eps;
  std::string delta = "1/10";
  double C = 8.0;
  std::uint64_t seed = 0;
  std::size_t max_retries = 8;
  std::optional<std::size_t> budget;
  std::size_t draw_cap = 1'000'000;
  std::size_t cap = 2000;
  std::string out;
};

int run_net(const NetArgs& a) {
  const RangeSpace space = load_instance(a.instance);
  const auto choice = parse_method_choice(a.method);
  if (!choice) throw std::invalid_argument("unknown method \"" + a.method + "\"");
  const Rational eps = eps_arg(a.eps);
  MethodConstants c;
  c.C = a.C;
  c.delta = parse_rational(a.delta);
  c.max_retries = a.max_retries;
  c.cal_budget = a.budget;
  c.cal_draw_cap = a.draw_cap;
  c.exact_cap = a.cap;
  ContextOptions opts;
  opts.doubling_cap = a.cap;
  opts.min_net_oracle = false;
  const auto ctx = analyse_instance(space, eps, opts);
  const NetReport r = run_method(space, eps, *choice, a.seed, c, ctx);
  json doc{{"instance", space.name()}};
  doc.update(to_json(r));
  emit(doc, a.out);
  std::cerr << choice->label << " " << r.size() << " " << (r.is_net ? "true" : "false") << " " << r.stats.draws
            << "\n";
  return r.is_net ? kOk : kFailed;
}

struct VerifyArgs {
  std::string instance;
  std::string eps;
  std::string points;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  const RangeSpace space = load_instance(a.instance);
  const auto points = parse_index_list(a.points);
  const NetReport r = verify_net(space, points, eps_arg(a.eps));
  json doc{{"instance", space.name()}};
  doc.update(to_json(r));
  emit(doc, a.out);
  std::cerr << "is_net=" << (r.is_net ? "true" : "false");
  if (!r.is_net) {
    std::cerr << " violations:";
    for (auto v : r.violations) std::cerr << " " << v;
  }
  std::cerr << "\n";
  return r.is_net ? kOk : kFailed;
}

struct ExperimentArgs {
  std::string config;
  std::string csv;
  std::string summary;
};

int run_experiment_cmd(const ExperimentArgs& a) {
  ExperimentConfig config = load_experiment_config(a.config);
  if (!a.csv.empty()) config.csv_path = a.csv;
  if (!a.summary.empty()) config.summary_path = a.summary;
  const auto result = run_experiment(config);
  if (config.csv_path)
    write_text_file(*config.csv_path, result.csv);
  else
    std::cout << result.csv;
  if (config.summary_path) write_text_file(*config.summary_path, result.summary.dump(2) + "\n");
  std::size_t errors = 0;
  for (const auto& row : result.rows) errors += !row.error.empty();
  std::cerr << result.rows.size() << " rows, " << errors << " failed runs\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite range spaces, complexity measures and epsilon-nets"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("--kind", gen.kind, "lower-bound|intervals|halfplanes|disks|halfspaces3d|random")->required();
  g->add_option("--name", gen.name);
  g->add_option("--k", gen.k);
  g->add_option("--d", gen.d);
  g->add_option("--l", gen.l);
  g->add_option("--m", gen.m);
  g->add_option("--cap", gen.cap, "range-count cap for lower-bound families");
  g->add_option("--points-file", gen.points_file, "CSV of integer coordinates");
  g->add_option("--random-points", gen.random_points);
  g->add_option("--coord-max", gen.coord_max);
  g->add_option("--n", gen.n);
  g->add_option("--num-ranges", gen.num_ranges);
  g->add_option("--size-law", gen.size_law, "uniform|geometric|fixed");
  g->add_option("--fixed-size", gen.fixed_size);
  g->add_option("--weight-law", gen.weight_law, "ones|uniform");
  g->add_option("--w-max", gen.w_max);
  g->add_option("--seed", gen.seed);
  g->add_option("--out", gen.out);

  ProfileArgs prof;
  auto* p = app.add_subcommand("profile", "Complexity profile of an instance");
  p->add_option("instance", prof.instance)->required();
  p->add_option("--eps", prof.eps)->required();
  p->add_option("--pi", prof.pi, "sizes y for the projection function");
  p->add_option("--phi", prof.phi, "y,l pairs for the shallow-cell complexity");
  p->add_option("--doubling", prof.doubling, "exact|bracket|auto")
      ->check(CLI::IsMember({"exact", "bracket", "auto"}));
  p->add_option("--doubling-cap", prof.doubling_cap);
  p->add_option("--seed", prof.seed);
  p->add_option("--out", prof.out);

  PackArgs pack;
  auto* k = app.add_subcommand("pack", "Packing of the ranges");
  k->add_option("instance", pack.instance)->required();
  k->add_option("--level", pack.level)->required();
  k->add_option("--ceiling", pack.ceiling);
  k->add_option("--mode", pack.mode)->check(CLI::IsMember({"greedy", "exact"}));
  k->add_option("--seed", pack.seed);
  k->add_option("--cap", pack.cap);
  k->add_flag("--haussler", pack.haussler, "check the packing-size bound");
  k->add_option("--out", pack.out);

  OigArgs oig;
  auto* o = app.add_subcommand("oig", "One-inclusion graph on a sample");
  o->add_option("instance", oig.instance)->required();
  o->add_option("--sample", oig.sample, "comma-separated point indices");
  o->add_option("--sample-size", oig.sample_size, "draw an i.i.d. sample of this size");
  o->add_option("--seed", oig.seed);
  o->add_option("--d", oig.d, "out-degree bound (default: VC dimension)");
  o->add_option("--target", oig.target, "range index of the target (default: empty)");
  o->add_option("--out", oig.out);

  NetArgs net;
  auto* n = app.add_subcommand("net", "Construct an eps-net");
  n->add_option("instance", net.instance)->required();
  n->add_option("--method", net.method, "iid|iid-capacity|stratified|doubling|doubling-small|cal|greedy|exact")
      ->required();
  n->add_option("--eps", net.eps)->required();
  n->add_option("--delta", net.delta);
  n->add_option("--C", net.C);
  n->add_option("--seed", net.seed);
  n->add_option("--max-retries", net.max_retries);
  n->add_option("--budget", net.budget, "CAL budget (default: number of ranges)");
  n->add_option("--draw-cap", net.draw_cap);
  n->add_option("--cap", net.cap, "cap for the exact oracles");
  n->add_option("--out", net.out);

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check a candidate eps-net");
  v->add_option("instance", ver.instance)->required();
  v->add_option("--eps", ver.eps)->required();
  v->add_option("--points", ver.points, "comma-separated point indices")->required();
  v->add_option("--out", ver.out);

  ExperimentArgs exp;
  auto* e = app.add_subcommand("experiment", "Run an experiment config");
  e->add_option("config", exp.config)->required();
  e->add_option("--csv", exp.csv);
  e->add_option("--summary", exp.summary);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForVersion& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kUsage;
  }

  try {
    if (*g) return run_gen(gen);
    if (*p) return run_profile(prof);
    if (*k) return run_pack(pack);
    if (*o) return run_oig(oig);
    if (*n) return run_net(net);
    if (*v) return run_verify(ver);
    if (*e) return run_experiment_cmd(exp);
  } catch (const TheoremViolation& err) {
    std::cerr << "theorem violation: " << err.what() << "\n";
    return kFailed;
  } catch (const CapExceeded& err) {
    std::cerr << "cap exceeded: " << err.what() << "\n";
    return kUsage;
  } catch (const json::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
