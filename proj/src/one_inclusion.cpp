#include "epsnet/one_inclusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "epsnet/parallel.hpp"
#include "epsnet/random.hpp"

namespace epsnet {
namespace {

std::uint64_t pair_key(std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

// Dinic's algorithm. Arcs are explored in insertion order, so the resulting
// flow depends only on how the network was built.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : out_(nodes), level_(nodes), it_(nodes) {}

  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
    const std::size_t id = to_.size();
    to_.push_back(to);
    cap_.push_back(cap);
    out_[from].push_back(id);
    to_.push_back(from);
    cap_.push_back(0);
    out_[to].push_back(id + 1);
    return id;
  }

  std::int64_t run(std::size_t s, std::size_t t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) flow += f;
    }
    return flow;
  }

  [[nodiscard]] std::int64_t flow_on(std::size_t arc) const { return cap_[arc ^ 1]; }

 private:
  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (auto a : out_[v])
        if (cap_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[v] + 1;
          q.push(to_[a]);
        }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(std::size_t v, std::size_t t, std::int64_t limit) {
    if (v == t) return limit;
    for (std::size_t& i = it_[v]; i < out_[v].size(); ++i) {
      const std::size_t a = out_[v][i];
      const std::size_t w = to_[a];
      if (cap_[a] <= 0 || level_[w] != level_[v] + 1) continue;
      if (std::int64_t f = dfs(w, t, std::min(limit, cap_[a]))) {
        cap_[a] -= f;
        cap_[a ^ 1] += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<std::vector<std::size_t>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
  std::vector<std::size_t> to_;
  std::vector<std::int64_t> cap_;
};

}  // namespace

std::optional<std::size_t> OneInclusionGraph::find(const PointSet& vector) const {
  auto it = index.find(vector);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> OneInclusionGraph::edge_between(std::size_t u, std::size_t v) const {
  auto it = edge_index.find(pair_key(u, v));
  if (it == edge_index.end()) return std::nullopt;
  return it->second;
}

PointSet restrict_to_sample(const PointSet& set, std::span<const std::size_t> sample) {
  PointSet v(sample.size());
  for (std::size_t j = 0; j < sample.size(); ++j)
    if (set.test(sample[j])) v.set(j);
  return v;
}

OneInclusionGraph build_oig(std::span<const PointSet> family, std::span<const std::size_t> sample) {
  if (sample.empty()) throw std::invalid_argument("one-inclusion graph needs a nonempty sample");
  OneInclusionGraph g;
  g.sample.assign(sample.begin(), sample.end());
  for (const auto& f : family) g.vertices.push_back(restrict_to_sample(f, sample));
  std::sort(g.vertices.begin(), g.vertices.end(), PointSetLexLess{});
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) g.index.emplace(g.vertices[i], i);

  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    for (std::size_t j = 0; j < sample.size(); ++j) {
      PointSet w = g.vertices[u];
      w.flip(j);
      auto v = g.find(w);
      if (v && *v > u) {
        g.edge_index.emplace(pair_key(u, *v), g.edges.size());
        g.edges.emplace_back(u, *v);
        g.edge_position.push_back(j);
      }
    }
  }
  return g;
}

std::vector<PointSet> classifier_family(const RangeSpace& space) {
  std::vector<PointSet> f = space.ranges();
  f.push_back(space.empty_set());
  return f;
}

DensityReport density_check(const OneInclusionGraph& graph, std::size_t d, std::size_t subgraph_samples,
                            std::uint64_t seed) {
  DensityReport r;
  r.vertices = graph.vertices.size();
  r.edges = graph.edges.size();
  auto consider = [&](std::size_t v, std::size_t e) {
    if (e > d * v) r.ok = false;
    if (v > 0) r.max_ratio = std::max(r.max_ratio, static_cast<double>(e) / static_cast<double>(v));
  };
  consider(r.vertices, r.edges);
  Rng rng(seed);
  const std::size_t n = graph.vertices.size();
  for (std::size_t s = 0; s < subgraph_samples && n > 0; ++s) {
    PointSet keep(n);
    for (std::size_t v = 0; v < n; ++v)
      if (rng.below(2)) keep.set(v);
    std::size_t e = 0;
    for (const auto& [u, v] : graph.edges)
      if (keep.test(u) && keep.test(v)) ++e;
    consider(keep.count(), e);
    ++r.subgraphs_checked;
  }
  return r;
}

std::vector<std::size_t> out_degrees(const OneInclusionGraph& graph, const Orientation& orientation) {
  std::vector<std::size_t> deg(graph.vertices.size(), 0);
  for (auto t : orientation.tail) ++deg[t];
  return deg;
}

std::optional<Orientation> orient_bounded(const OneInclusionGraph& graph, std::size_t d) {
  const std::size_t m = graph.edges.size();
  const std::size_t v = graph.vertices.size();
  Orientation o;
  o.bound = d;
  if (m == 0) return o;
  if (m > d * v) return std::nullopt;

  // nodes: source, m edge nodes, v vertex nodes, sink
  const std::size_t source = 0;
  const std::size_t sink = 1 + m + v;
  MaxFlow flow(sink + 1);
  std::vector<std::size_t> to_first(m);
  for (std::size_t e = 0; e < m; ++e) flow.add_arc(source, 1 + e, 1);
  for (std::size_t e = 0; e < m; ++e) {
    to_first[e] = flow.add_arc(1 + e, 1 + m + graph.edges[e].first, 1);
    flow.add_arc(1 + e, 1 + m + graph.edges[e].second, 1);
  }
  for (std::size_t x = 0; x < v; ++x) flow.add_arc(1 + m + x, sink, static_cast<std::int64_t>(d));
  if (flow.run(source, sink) != static_cast<std::int64_t>(m)) return std::nullopt;

  o.tail.resize(m);
  for (std::size_t e = 0; e < m; ++e)
    o.tail[e] = flow.flow_on(to_first[e]) > 0 ? graph.edges[e].first : graph.edges[e].second;
  return o;
}

bool oig_predict(const OneInclusionGraph& graph, const Orientation& orientation, std::size_t hidden,
                 const PointSet& labels) {
  if (hidden >= graph.sample.size()) throw std::out_of_range("hidden position outside the sample");
  PointSet zero = labels;
  zero.reset(hidden);
  PointSet one = labels;
  one.set(hidden);
  const auto g0 = graph.find(zero);
  const auto g1 = graph.find(one);
  if (!g0 && !g1) throw std::invalid_argument("no vertex is consistent with the observed labels");
  if (!g1) return false;
  if (!g0) return true;
  const auto e = graph.edge_between(*g0, *g1);
  return orientation.head(graph, *e) == *g1;
}

LooResult loo_error(const OneInclusionGraph& graph, const Orientation& orientation, const PointSet& f_star) {
  if (!graph.find(f_star)) throw std::invalid_argument("target is not a vertex of the graph");
  LooResult r;
  r.positions = graph.sample.size();
  for (std::size_t i = 0; i < r.positions; ++i)
    if (oig_predict(graph, orientation, i, f_star) != f_star.test(i)) ++r.mistakes;
  r.error = Rational(static_cast<std::int64_t>(r.mistakes), static_cast<std::int64_t>(r.positions));
  return r;
}

MonteCarloEstimate expected_risk_estimate(const RangeSpace& space, std::span<const PointSet> family,
                                          const PointSet& f_star, std::size_t n, std::size_t d, std::size_t trials,
                                          std::uint64_t seed) {
  if (n == 0 || trials == 0) throw std::invalid_argument("sample size and trial count must be positive");
  const WeightedSampler sampler(space.weights());
  std::vector<double> loo(trials);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng = Rng::stream(seed, t);
    std::vector<std::size_t> sample(n + 1);
    for (auto& x : sample) x = sampler.draw(rng);
    const auto graph = build_oig(family, sample);
    const auto orientation = orient_bounded(graph, d);
    if (!orientation) throw std::runtime_error("no orientation with the requested out-degree bound");
    loo[t] = loo_error(graph, *orientation, restrict_to_sample(f_star, sample)).error.to_double();
  });
  MonteCarloEstimate e;
  e.trials = trials;
  e.mean = std::accumulate(loo.begin(), loo.end(), 0.0) / static_cast<double>(trials);
  if (trials > 1) {
    double ss = 0;
    for (double x : loo) ss += (x - e.mean) * (x - e.mean);
    e.standard_error = std::sqrt(ss / static_cast<double>(trials - 1) / static_cast<double>(trials));
  }
  return e;
}

}  // namespace epsnet
