#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "epsnet/packing.hpp"
#include "epsnet/point_set.hpp"
#include "epsnet/range_space.hpp"
#include "epsnet/rational.hpp"

namespace epsnet {

/// One-inclusion graph of a family on a sample S.
///
/// A vertex is a membership vector over the positions of S (bit j set iff the
/// j-th sample point lies in the set). S may repeat points; repeated positions
/// then agree on every vertex. Edges join vectors that differ in exactly one
/// position.
struct OneInclusionGraph {
  std::vector<std::size_t> sample;
  std::vector<PointSet> vertices;  // capacity |S|, lexicographic order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (u, v), u < v
  std::vector<std::size_t> edge_position;

  [[nodiscard]] std::optional<std::size_t> find(const PointSet& vector) const;
  /// Edge index joining u and v, if any.
  [[nodiscard]] std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const;

  std::unordered_map<PointSet, std::size_t, PointSetHash> index;
  std::unordered_map<std::uint64_t, std::size_t> edge_index;
};

/// Membership vector of `set` on the sample positions.
PointSet restrict_to_sample(const PointSet& set, std::span<const std::size_t> sample);

OneInclusionGraph build_oig(std::span<const PointSet> family, std::span<const std::size_t> sample);

/// Explicit ranges plus the empty set: the disagreement regions of a class
/// whose target is realized by the empty range.
std::vector<PointSet> classifier_family(const RangeSpace& space);

struct DensityReport {
  bool ok = true;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t subgraphs_checked = 0;
  /// worst |E|/|V| over the full graph and all sampled induced subgraphs
  double max_ratio = 0;
};

/// |E| <= d |V| on the graph and on `subgraph_samples` random induced subgraphs.
DensityReport density_check(const OneInclusionGraph& graph, std::size_t d, std::size_t subgraph_samples,
                            std::uint64_t seed);

/// tail[e] is the endpoint edge e points away from; out-degree counts tails.
struct Orientation {
  std::size_t bound = 0;
  std::vector<std::size_t> tail;

  [[nodiscard]] std::size_t head(const OneInclusionGraph& g, std::size_t e) const {
    return g.edges[e].first == tail[e] ? g.edges[e].second : g.edges[e].first;
  }
};

std::vector<std::size_t> out_degrees(const OneInclusionGraph& graph, const Orientation& orientation);

/// Orientation with every out-degree at most d, via max-flow (source -> edge
/// node capacity 1, edge node -> each endpoint capacity 1, vertex -> sink
/// capacity d); the endpoint receiving an edge's unit becomes its tail.
/// Returns nullopt when no such orientation exists.
std::optional<Orientation> orient_bounded(const OneInclusionGraph& graph, std::size_t d);

/// Predicted membership of the hidden position given the other positions of
/// `labels`: the unique consistent vertex's value, or, when both completions
/// are vertices, the value of the head of the edge joining them. Throws
/// std::invalid_argument when no vertex is consistent.
bool oig_predict(const OneInclusionGraph& graph, const Orientation& orientation, std::size_t hidden,
                 const PointSet& labels);

struct LooResult {
  std::size_t mistakes = 0;
  std::size_t positions = 0;
  Rational error;
};

/// Leave-one-out error of the predictor on target vector f_star (a vertex).
LooResult loo_error(const OneInclusionGraph& graph, const Orientation& orientation, const PointSet& f_star);

/// Monte Carlo estimate of E[LOO] on i.i.d. samples of size n+1 from P, which by
/// exchangeability equals the expected disagreement after n labelled points.
/// Each trial orients its own graph with bound d.
MonteCarloEstimate expected_risk_estimate(const RangeSpace& space, std::span<const PointSet> family,
                                          const PointSet& f_star, std::size_t n, std::size_t d, std::size_t trials,
                                          std::uint64_t seed);

}  // namespace epsnet
