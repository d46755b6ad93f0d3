#pragma once

#include <cstdint>
#include <random>

#include "rosenets/graph.hpp"

namespace rosenets {

// Portable draws on top of mt19937_64 so that a seed pins the instance
// stream independently of the standard library's distribution choices.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n);
double uniform_real(std::mt19937_64& rng, double lo, double hi);

enum class SelfLoopMode { kNone, kAll, kRandom };

struct RandomGraphSpec {
  int n = 6;
  double edge_prob = 0.35;
  bool acyclic = true;  // cross edges only from smaller to larger id
  SelfLoopMode loops = SelfLoopMode::kAll;
  double min_weight = 0.1;       // cross-edge weights in [min_weight, 1]
  double min_loop_weight = 0.3;  // loop weights in [min_loop_weight, 1]
  int max_edges = 0;             // 0: unlimited; otherwise drop extras at random
  bool ensure_cross_edge = true;
};

DirectedGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec);

/// Duplicate-free random sequence of the given length over g's elements.
Sequence random_sequence(std::mt19937_64& rng, const DirectedGraph& g, std::size_t len);

/// Seven elements A..G: a weight-0.9 star out of B reached from A, plus a
/// weight-0.5 triangle C -> D -> G, C -> G. The running example for the
/// greedy and removal golden tests.
DirectedGraph star_triangle_graph();

/// Directed chain 0 -> 1 -> ... -> n-1 with the given uniform weight.
DirectedGraph chain_graph(int n, double weight);

}  // namespace rosenets
