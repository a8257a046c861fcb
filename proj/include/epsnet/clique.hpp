#pragma once

#include <cstddef>
#include <vector>

#include "epsnet/point_set.hpp"

namespace epsnet {

/// Maximum clique of an undirected graph given as one neighbour set per vertex
/// (capacity = vertex count, no self loops).
///
/// Branch and bound over bitsets: vertices are renumbered by non-increasing
/// degree (ties by index) and each node is bounded by a greedy sequential
/// colouring of the candidate set. The result is deterministic and returned
/// in ascending original vertex order.
std::vector<std::size_t> max_clique(const std::vector<PointSet>& adjacency);

/// Clique greedily grown in the given vertex order (a maximal clique).
std::vector<std::size_t> greedy_clique(const std::vector<PointSet>& adjacency,
                                       const std::vector<std::size_t>& order);

}  // namespace epsnet
