#include "rosenets/utility.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "rosenets/random_instances.hpp"

using namespace rosenets;

namespace {

constexpr double kTol = 1e-9;

EdgeSet full_set(const DirectedGraph& g) {
  EdgeSet es(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) es.add(e);
  return es;
}

EdgeSet subset_from_mask(const DirectedGraph& g, std::uint32_t mask) {
  EdgeSet es(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (mask & (1u << e)) es.add(e);
  }
  return es;
}

}  // namespace

TEST_CASE("modular evaluation on the star-triangle greedy set") {
  DirectedGraph g = star_triangle_graph();
  EdgeSetFunction h(g, UtilityKind::kModularSum);
  EdgeSet es = induced_edge_set(g, Sequence({0, 1, 2, 4, 5}));
  CHECK(std::abs(h.evaluate(es) - 3.6) < kTol);
}

TEST_CASE("empty set evaluates to zero for both kinds") {
  DirectedGraph g = star_triangle_graph();
  for (UtilityKind kind : {UtilityKind::kModularSum, UtilityKind::kProbabilisticCoverage}) {
    EdgeSetFunction h(g, kind);
    CHECK(h.evaluate(EdgeSet(g.edge_count())) == 0.0);
  }
}

TEST_CASE("coverage uses the per-head product") {
  DirectedGraph g(3, {{0, 2, 0.5}, {1, 2, 0.5}});
  EdgeSetFunction h(g, UtilityKind::kProbabilisticCoverage);
  CHECK(std::abs(h.evaluate(full_set(g)) - 0.75) < kTol);

  SUBCASE("marginal of the second edge given the first") {
    EdgeSet one(g.edge_count());
    one.add(*g.find_edge(0, 2));
    CHECK(std::abs(h.marginal(*g.find_edge(1, 2), one) - 0.25) < kTol);
  }
}

TEST_CASE("foreign edge set is rejected") {
  DirectedGraph g = star_triangle_graph();
  EdgeSetFunction h(g, UtilityKind::kModularSum);
  CHECK_THROWS_AS(h.evaluate(EdgeSet(3)), std::invalid_argument);
}

TEST_CASE("marginal basics") {
  DirectedGraph g = star_triangle_graph();

  SUBCASE("modular marginal is the weight") {
    EdgeSetFunction h(g, UtilityKind::kModularSum);
    CHECK(std::abs(h.marginal(*g.find_edge(2, 3), EdgeSet(g.edge_count())) - 0.5) < kTol);
  }
  SUBCASE("member edge has zero marginal") {
    for (UtilityKind kind :
         {UtilityKind::kModularSum, UtilityKind::kProbabilisticCoverage}) {
      EdgeSetFunction h(g, kind);
      EdgeSet es(g.edge_count());
      es.add(0);
      CHECK(h.marginal(0, es) == 0.0);
    }
  }
}

TEST_CASE("marginal equals the evaluation difference") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    RandomGraphSpec spec;
    spec.n = 3 + static_cast<int>(uniform_index(rng, 4));
    spec.loops = SelfLoopMode::kRandom;
    spec.acyclic = false;
    spec.max_edges = 10;
    DirectedGraph g = random_graph(rng, spec);
    if (g.edge_count() == 0) continue;
    UtilityKind kind = trial % 2 == 0 ? UtilityKind::kModularSum
                                      : UtilityKind::kProbabilisticCoverage;
    EdgeSetFunction h(g, kind);
    std::uint32_t mask =
        static_cast<std::uint32_t>(uniform_index(rng, 1u << g.edge_count()));
    EdgeSet es = subset_from_mask(g, mask);
    EdgeIndex e = static_cast<EdgeIndex>(uniform_index(rng, g.edge_count()));
    EdgeSet with = subset_from_mask(g, mask | (1u << e));
    CHECK(std::abs(h.marginal(e, es) - (h.evaluate(with) - h.evaluate(es))) < kTol);
  }
}

TEST_CASE("sequence values on the star-triangle example") {
  DirectedGraph g = star_triangle_graph();
  EdgeSetFunction h(g, UtilityKind::kModularSum);
  // A,B,C,D,G induces (A,B),(B,C),(C,D),(C,G),(D,G).
  CHECK(std::abs(sequence_value(h, Sequence({0, 1, 2, 3, 6})) - 3.3) < kTol);
  CHECK(sequence_value(h, Sequence()) == 0.0);
  CHECK(std::abs(sequence_value(h, Sequence({0, 1, 2, 4, 5})) - 3.6) < kTol);
}

TEST_CASE("residual values on the star-triangle example") {
  DirectedGraph g = star_triangle_graph();
  EdgeSetFunction h(g, UtilityKind::kModularSum);
  Sequence greedy_pick({0, 1, 2, 4, 5});
  Sequence robust_pick({0, 1, 2, 3, 6});

  std::vector<ElementId> z1 = {1, 4};  // B and E
  CHECK(residual_value(h, greedy_pick, z1) == 0.0);
  CHECK(residual_value(h, greedy_pick, {}) ==
        doctest::Approx(sequence_value(h, greedy_pick)));
  std::vector<ElementId> z2 = {1, 2};  // B and C
  CHECK(std::abs(residual_value(h, robust_pick, z2) - 0.5) < kTol);
}

TEST_CASE("value on elements is not submodular even though h is") {
  // A single edge: one endpoint alone is worthless, the pair is not.
  DirectedGraph g(2, {{0, 1, 0.5}});
  EdgeSetFunction h(g, UtilityKind::kModularSum);
  CHECK(sequence_value(h, Sequence({1})) == 0.0);
  CHECK(std::abs(sequence_value(h, Sequence({0, 1})) - 0.5) < kTol);
}

TEST_CASE("coverage is bounded by the number of covered heads") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    RandomGraphSpec spec;
    spec.n = 3 + static_cast<int>(uniform_index(rng, 5));
    spec.loops = SelfLoopMode::kRandom;
    spec.acyclic = false;
    DirectedGraph g = random_graph(rng, spec);
    EdgeSetFunction h(g, UtilityKind::kProbabilisticCoverage);
    EdgeSet es = full_set(g);
    std::vector<bool> head_seen(g.n_elements(), false);
    int heads = 0;
    for (const Edge& e : g.edges()) {
      if (!head_seen[e.head]) {
        head_seen[e.head] = true;
        ++heads;
      }
    }
    CHECK(h.evaluate(es) <= heads + kTol);
  }
}

TEST_CASE("modular marginal ignores the context set") {
  DirectedGraph g = star_triangle_graph();
  EdgeSetFunction h(g, UtilityKind::kModularSum);
  EdgeIndex target = *g.find_edge(3, 6);
  EdgeSet empty(g.edge_count());
  EdgeSet some(g.edge_count());
  some.add(*g.find_edge(0, 1));
  some.add(*g.find_edge(1, 2));
  CHECK(h.marginal(target, empty) == h.marginal(target, some));
}

TEST_CASE("eval counter counts evaluations and marginals") {
  DirectedGraph g = star_triangle_graph();
  EdgeSetFunction h(g, UtilityKind::kModularSum);
  EvalCounter counter;
  h.attach_counter(&counter);
  EdgeSet es(g.edge_count());
  h.evaluate(es);
  h.marginal(0, es);
  h.marginal(0, es);
  CHECK(counter.calls == 3);
  counter.reset();
  CHECK(counter.calls == 0);
  sequence_value(h, Sequence({0, 1}));
  CHECK(counter.calls == 1);
}
