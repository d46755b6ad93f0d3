#include "rosenets/random_instances.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rosenets {

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  // Rejection keeps the draw unbiased without relying on distribution
  // implementations.
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + unit * (hi - lo);
}

DirectedGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec) {
  std::vector<Edge> cross;
  for (ElementId i = 0; i < spec.n; ++i) {
    for (ElementId j = 0; j < spec.n; ++j) {
      if (i == j) continue;
      if (spec.acyclic && i > j) continue;
      if (uniform_real(rng, 0.0, 1.0) < spec.edge_prob)
        cross.push_back({i, j, uniform_real(rng, spec.min_weight, 1.0)});
    }
  }
  if (cross.empty() && spec.ensure_cross_edge && spec.n >= 2) {
    ElementId i = static_cast<ElementId>(uniform_index(rng, static_cast<std::uint64_t>(spec.n)));
    ElementId j = static_cast<ElementId>(uniform_index(rng, static_cast<std::uint64_t>(spec.n) - 1));
    if (j >= i) ++j;
    if (spec.acyclic && i > j) std::swap(i, j);
    cross.push_back({i, j, uniform_real(rng, spec.min_weight, 1.0)});
  }

  std::vector<Edge> edges;
  for (ElementId v = 0; v < spec.n; ++v) {
    bool loop = spec.loops == SelfLoopMode::kAll ||
                (spec.loops == SelfLoopMode::kRandom && uniform_real(rng, 0.0, 1.0) < 0.5);
    if (loop) edges.push_back({v, v, uniform_real(rng, spec.min_loop_weight, 1.0)});
  }

  if (spec.max_edges > 0) {
    std::size_t budget = static_cast<std::size_t>(spec.max_edges);
    while (edges.size() + cross.size() > budget && !cross.empty()) {
      std::size_t drop = uniform_index(rng, cross.size());
      cross.erase(cross.begin() + static_cast<std::ptrdiff_t>(drop));
    }
    while (edges.size() > budget) edges.pop_back();
  }
  edges.insert(edges.end(), cross.begin(), cross.end());
  return DirectedGraph(spec.n, std::move(edges));
}

Sequence random_sequence(std::mt19937_64& rng, const DirectedGraph& g, std::size_t len) {
  std::vector<ElementId> pool(static_cast<std::size_t>(g.n_elements()));
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<ElementId>(i);
  if (len > pool.size()) throw std::invalid_argument("sequence longer than element set");
  Sequence out;
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t pick = i + uniform_index(rng, pool.size() - i);
    std::swap(pool[i], pool[pick]);
    out.append(pool[i]);
  }
  return out;
}

DirectedGraph star_triangle_graph() {
  const ElementId a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, g = 6;
  std::vector<Edge> edges = {
      {a, b, 0.9}, {b, c, 0.9}, {b, e, 0.9}, {b, f, 0.9},
      {c, d, 0.5}, {c, g, 0.5}, {d, g, 0.5},
  };
  return DirectedGraph(7, std::move(edges), {"A", "B", "C", "D", "E", "F", "G"});
}

DirectedGraph chain_graph(int n, double weight) {
  std::vector<Edge> edges;
  for (ElementId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, weight});
  return DirectedGraph(n, std::move(edges));
}

}  // namespace rosenets
