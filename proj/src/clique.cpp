#include "epsnet/clique.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace epsnet {
namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<PointSet> adjacency) : adj_(std::move(adjacency)) {}

  std::vector<std::size_t> run() {
    const std::size_t n = adj_.size();
    PointSet all = PointSet::full(n);
    std::vector<std::size_t> current;
    expand(current, all);
    return best_;
  }

 private:
  // Sequential greedy colouring of `candidates`; fills order/colour with
  // non-decreasing colours.
  void colour(const PointSet& candidates, std::vector<std::size_t>& order,
              std::vector<std::size_t>& colours) const {
    order.clear();
    colours.clear();
    PointSet uncoloured = candidates;
    std::size_t k = 0;
    while (!uncoloured.empty()) {
      ++k;
      PointSet q = uncoloured;
      while (!q.empty()) {
        const std::size_t v = q.first();
        q.reset(v);
        uncoloured.reset(v);
        q.subtract(adj_[v]);
        order.push_back(v);
        colours.push_back(k);
      }
    }
  }

  void expand(std::vector<std::size_t>& current, PointSet candidates) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colours;
    colour(candidates, order, colours);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + colours[idx] <= best_.size()) return;
      const std::size_t v = order[idx];
      current.push_back(v);
      PointSet next = candidates & adj_[v];
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<PointSet> adj_;
  std::vector<std::size_t> best_;
};

std::vector<std::size_t> clique_of_component(const std::vector<PointSet>& adjacency,
                                             const std::vector<std::size_t>& vertices) {
  const std::size_t n = vertices.size();
  std::vector<std::size_t> local(adjacency.size(), n);
  for (std::size_t i = 0; i < n; ++i) local[vertices[i]] = i;

  std::vector<std::size_t> rank(n);
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    adjacency[vertices[i]].for_each([&](std::size_t j) { degree[i] += local[j] < n; });
  std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[rank[i]] = i;

  std::vector<PointSet> renumbered(n, PointSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    adjacency[vertices[rank[i]]].for_each([&](std::size_t j) {
      if (local[j] < n && local[j] != rank[i]) renumbered[i].set(position[local[j]]);
    });
  }

  std::vector<std::size_t> clique = CliqueSearch(std::move(renumbered)).run();
  for (auto& v : clique) v = vertices[rank[v]];
  return clique;
}

}  // namespace

std::vector<std::size_t> max_clique(const std::vector<PointSet>& adjacency) {
  const std::size_t n = adjacency.size();
  if (n == 0) return {};
  for (const auto& row : adjacency)
    if (row.capacity() != n) throw std::invalid_argument("adjacency rows must have capacity = vertex count");

  // A clique of a join is a union of cliques of its parts, so the components
  // of the complement graph are solved independently.
  std::vector<std::size_t> clique;
  PointSet unseen = PointSet::full(n);
  while (!unseen.empty()) {
    std::vector<std::size_t> component;
    PointSet frontier(n);
    frontier.set(unseen.first());
    unseen.reset(unseen.first());
    while (!frontier.empty()) {
      const std::size_t v = frontier.first();
      frontier.reset(v);
      component.push_back(v);
      PointSet next = unseen;
      next.subtract(adjacency[v]);
      unseen.subtract(next);
      frontier |= next;
    }
    std::sort(component.begin(), component.end());
    const auto part = clique_of_component(adjacency, component);
    clique.insert(clique.end(), part.begin(), part.end());
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::vector<std::size_t> greedy_clique(const std::vector<PointSet>& adjacency,
                                       const std::vector<std::size_t>& order) {
  std::vector<std::size_t> clique;
  for (auto v : order) {
    const bool fits = std::all_of(clique.begin(), clique.end(),
                                  [&](std::size_t u) { return adjacency[u].test(v); });
    if (fits) clique.push_back(v);
  }
  return clique;
}

}  // namespace epsnet
