#include "rosenets/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "rosenets/random_instances.hpp"

using namespace rosenets;

namespace {

constexpr double kTol = 1e-9;

// Independent adversary: enumerate every subset of at most tau elements by
// bitmask, no exactly-tau reduction.
double brute_force_worst(const EdgeSetFunction& h, const Sequence& s, std::size_t tau) {
  double best = sequence_value(h, s);
  std::size_t n = s.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > tau) continue;
    std::vector<ElementId> z;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) z.push_back(s[i]);
    }
    best = std::min(best, residual_value(h, s, z));
  }
  return best;
}

}  // namespace

TEST_CASE("exact adversary on the star-triangle sequences") {
  DirectedGraph g = star_triangle_graph();
  EdgeSetFunction h(g, UtilityKind::kModularSum);

  SUBCASE("the greedy pick collapses to zero") {
    auto out = worst_case_removal(h, Sequence({0, 1, 2, 4, 5}), 2);
    REQUIRE(out.has_value());
    CHECK(out->residual == 0.0);
    // Lexicographically smallest zeroing set.
    CHECK(out->removed == std::vector<ElementId>({0, 1}));
  }
  SUBCASE("the two-phase pick keeps half a triangle edge") {
    auto out = worst_case_removal(h, Sequence({0, 1, 2, 3, 6}), 2);
    REQUIRE(out.has_value());
    CHECK(std::abs(out->residual - 0.5) < kTol);
    // {A,C} ties {B,C} and friends at 0.5 and sorts first.
    CHECK(out->removed == std::vector<ElementId>({0, 2}));
  }
  SUBCASE("tau zero removes nothing") {
    Sequence s({0, 1, 2, 3, 6});
    auto out = worst_case_removal(h, s, 0);
    REQUIRE(out.has_value());
    CHECK(out->removed.empty());
    CHECK(out->residual == doctest::Approx(sequence_value(h, s)));
  }
  SUBCASE("tau covering the whole sequence removes everything") {
    auto out = worst_case_removal(h, Sequence({0, 1}), 5);
    REQUIRE(out.has_value());
    CHECK(out->residual == 0.0);
    CHECK(out->removed == std::vector<ElementId>({0, 1}));
  }
}

TEST_CASE("prefix removal") {
  DirectedGraph g = star_triangle_graph();
  EdgeSetFunction h(g, UtilityKind::kModularSum);
  Sequence s({0, 1, 2, 3, 6});

  SUBCASE("drops the first tau elements") {
    RemovalOutcome out = prefix_removal(h, s, 2);
    CHECK(out.removed == std::vector<ElementId>({0, 1}));
    CHECK(std::abs(out.residual - 1.5) < kTol);  // C,D,G triangle survives
  }
  SUBCASE("tau zero is the identity") {
    RemovalOutcome out = prefix_removal(h, s, 0);
    CHECK(out.removed.empty());
    CHECK(out.residual == doctest::Approx(sequence_value(h, s)));
  }
  SUBCASE("tau beyond the length empties the sequence") {
    CHECK(prefix_removal(h, s, 9).residual == 0.0);
  }
}

TEST_CASE("exact adversary matches the at-most-tau brute force") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    RandomGraphSpec spec;
    spec.n = 3 + static_cast<int>(uniform_index(rng, 6));
    spec.loops = SelfLoopMode::kRandom;
    spec.acyclic = false;
    DirectedGraph g = random_graph(rng, spec);
    EdgeSetFunction h(g, trial % 2 == 0 ? UtilityKind::kModularSum
                                        : UtilityKind::kProbabilisticCoverage);
    Sequence s = random_sequence(rng, g, 1 + uniform_index(rng, g.n_elements()));
    std::size_t tau = uniform_index(rng, s.size() + 2);
    auto out = worst_case_removal(h, s, tau);
    REQUIRE(out.has_value());
    CHECK(std::abs(out->residual - brute_force_worst(h, s, tau)) < kTol);
    // Residual matches an independent recomputation from the witness.
    CHECK(std::abs(out->residual - residual_value(h, s, out->removed)) < kTol);
    CHECK(out->removed.size() <= std::min(tau, s.size()));
  }
}

TEST_CASE("worst case dominates the prefix heuristic and decreases in tau") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    RandomGraphSpec spec;
    spec.n = 4 + static_cast<int>(uniform_index(rng, 5));
    spec.loops = SelfLoopMode::kRandom;
    spec.acyclic = false;
    DirectedGraph g = random_graph(rng, spec);
    EdgeSetFunction h(g, UtilityKind::kProbabilisticCoverage);
    Sequence s = random_sequence(rng, g, g.n_elements());
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t tau = 0; tau <= s.size(); ++tau) {
      auto exact = worst_case_removal(h, s, tau);
      REQUIRE(exact.has_value());
      CHECK(exact->residual <= prefix_removal(h, s, tau).residual + kTol);
      CHECK(exact->residual <= previous + kTol);
      previous = exact->residual;
    }
  }
}

TEST_CASE("a heavy chain concentrates value in its middle") {
  // Four nodes, three 0.9 edges: worth 2.7 intact, 0.9 after the worst
  // single removal, nothing after the worst pair.
  DirectedGraph g = chain_graph(4, 0.9);
  EdgeSetFunction h(g, UtilityKind::kModularSum);
  Sequence s({0, 1, 2, 3});
  CHECK(std::abs(sequence_value(h, s) - 2.7) < kTol);
  CHECK(std::abs(worst_case_removal(h, s, 1)->residual - 0.9) < kTol);
  CHECK(std::abs(worst_case_removal(h, s, 2)->residual - 0.0) < kTol);
}

TEST_CASE("enumeration cap reports infeasible") {
  CHECK(exact_removal_cost(30, 15) > kExactRemovalCap);
  std::vector<Edge> edges;
  for (ElementId v = 0; v + 1 < 30; ++v) edges.push_back({v, v + 1, 0.5});
  DirectedGraph g(30, edges);
  EdgeSetFunction h(g, UtilityKind::kModularSum);
  std::vector<ElementId> items;
  for (ElementId v = 0; v < 30; ++v) items.push_back(v);
  CHECK_FALSE(worst_case_removal(h, Sequence(items), 15).has_value());
}
