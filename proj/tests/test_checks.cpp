#include "rosenets/checks.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "rosenets/algorithms.hpp"
#include "rosenets/campaigns.hpp"
#include "rosenets/random_instances.hpp"

using namespace rosenets;

TEST_CASE("single-element block reduces to the element's own gain") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    RandomGraphSpec spec;
    spec.n = 3 + static_cast<int>(uniform_index(rng, 5));
    spec.loops = SelfLoopMode::kRandom;
    spec.acyclic = false;
    DirectedGraph g = random_graph(rng, spec);
    EdgeSetFunction h(g, trial % 2 == 0 ? UtilityKind::kModularSum
                                        : UtilityKind::kProbabilisticCoverage);
    Sequence both = random_sequence(rng, g, 1 + uniform_index(rng, g.n_elements()));
    Sequence s1, s2;
    for (std::size_t i = 0; i + 1 < both.size(); ++i) s1.append(both[i]);
    s2.append(both[both.size() - 1]);

    AdditionGainCheck check = check_addition_gain(h, s1, s2);
    CHECK(check.holds);
    // The block's only element realizes the appended gain itself.
    CHECK(check.vertex_append_holds);
  }
}

TEST_CASE("zero-gain blocks hold trivially") {
  DirectedGraph g(4, {{0, 1, 0.9}});
  EdgeSetFunction h(g, UtilityKind::kModularSum);
  AdditionGainCheck check = check_addition_gain(h, Sequence({0, 1}), Sequence({2, 3}));
  CHECK(check.gain_append == 0.0);
  CHECK(check.holds);
}

TEST_CASE("preconditions on the block check") {
  DirectedGraph g(3, {{0, 1, 0.5}});
  EdgeSetFunction h(g, UtilityKind::kModularSum);
  CHECK_THROWS_AS(check_addition_gain(h, Sequence({0}), Sequence()),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_addition_gain(h, Sequence({0}), Sequence({0, 1})),
                  std::invalid_argument);
}

TEST_CASE("the per-vertex reading fails where the edge form survives") {
  // The block's internal edge is invisible to any single added element.
  DirectedGraph g(3, {{1, 2, 0.9}});
  EdgeSetFunction h(g, UtilityKind::kModularSum);
  AdditionGainCheck check = check_addition_gain(h, Sequence({0}), Sequence({1, 2}));
  CHECK(check.holds);
  CHECK_FALSE(check.vertex_append_holds);
  CHECK_FALSE(check.vertex_prepend_holds);
}

TEST_CASE("greedy value bound on chains") {
  for (int n = 2; n <= 6; ++n) {
    for (double w : {0.3, 0.8, 1.0}) {
      DirectedGraph g = chain_graph(n, w);
      EdgeSetFunction h(g, UtilityKind::kModularSum);
      GreedyValueBoundCheck check = check_greedy_value_bound(g, h, n);
      CHECK_FALSE(check.skipped);
      CHECK(check.holds);
      CHECK(check.checked > 0);
    }
  }
}

TEST_CASE("greedy value bound skips worthless graphs") {
  DirectedGraph g(3, {});
  EdgeSetFunction h(g, UtilityKind::kModularSum);
  CHECK(check_greedy_value_bound(g, h, 3).skipped);
}

TEST_CASE("degenerate full subsequence bound is zero") {
  DirectedGraph g = chain_graph(4, 0.5);
  EdgeSetFunction h(g, UtilityKind::kModularSum);
  GreedyValueBoundCheck check = check_greedy_value_bound(g, h, 4);
  // The full subsequence contributes a zero bound; the check covers it
  // without a violation.
  CHECK(check.holds);
}

TEST_CASE("robust optimum never beats the reduced plain optimum") {
  DirectedGraph g = star_triangle_graph();
  EdgeSetFunction h(g, UtilityKind::kModularSum);

  SUBCASE("hub removal example") {
    std::vector<ElementId> z = {1};
    RobustReductionCheck check = check_robust_reduction(h, 4, 1, z);
    REQUIRE_FALSE(check.skipped);
    CHECK(check.holds);
    CHECK(check.reduced_side == doctest::Approx(1.5));  // C,D,G without B
  }
  SUBCASE("tau zero with empty z compares identical problems") {
    RobustReductionCheck check = check_robust_reduction(h, 3, 0, {});
    REQUIRE_FALSE(check.skipped);
    CHECK(check.robust_side == doctest::Approx(check.reduced_side));
  }
  SUBCASE("preconditions") {
    std::vector<ElementId> z = {1, 2};
    CHECK_THROWS_AS(check_robust_reduction(h, 4, 1, z), std::invalid_argument);
  }
}

TEST_CASE("campaign self-test hook detects corrupted ratios") {
  CampaignParams params;
  params.instances = 40;
  params.seed = 99;
  CampaignReport honest = sandwich_campaign(params);
  CHECK(honest.violations == 0);
  params.ratio_corruption = 50.0;
  CampaignReport corrupted = sandwich_campaign(params);
  CHECK(corrupted.violations > 0);
  CHECK_FALSE(corrupted.first_witness.empty());
}

TEST_CASE("bound coefficient limits") {
  // Vanishing c with a full-length complement approaches 1 - e^{-1/d}.
  for (int d = 1; d <= 3; ++d) {
    double limit = (std::exp(1.0 / d) - 1.0) / std::exp(1.0 / d);
    CHECK(greedy_bound_coefficient(5, 5, d, 1e-12) == doctest::Approx(limit));
  }
  CHECK(greedy_bound_coefficient(0, 5, 1, 1.0) == 0.0);
  // Larger certificates only strengthen the bound.
  CHECK(greedy_bound_coefficient(2, 5, 1, 0.9) > greedy_bound_coefficient(2, 5, 1, 0.1));
}
