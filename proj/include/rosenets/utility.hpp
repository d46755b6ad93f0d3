#pragma once

#include <cstdint>
#include <span>

#include "rosenets/graph.hpp"

namespace rosenets {

enum class UtilityKind {
  // h(E1) = sum over heads j of 1 - prod_{(i,j) in E1} (1 - w_ij).
  kProbabilisticCoverage,
  // h(E1) = sum of member weights.
  kModularSum,
};

/// Counts h evaluations, marginals included. Owned by one algorithm run.
struct EvalCounter {
  std::uint64_t calls = 0;
  void reset() { calls = 0; }
};

/// Monotone submodular set function over the edges of one graph.
/// Evaluation is pure and concurrently callable; the attached counter, if
/// any, must not be shared across concurrent runs.
class EdgeSetFunction {
 public:
  EdgeSetFunction(const DirectedGraph& g, UtilityKind kind) : graph_(&g), kind_(kind) {}

  const DirectedGraph& graph() const { return *graph_; }
  UtilityKind kind() const { return kind_; }

  void attach_counter(EvalCounter* counter) { counter_ = counter; }

  /// h(es). Throws if es is not bound to this graph's edge universe.
  double evaluate(const EdgeSet& es) const;

  /// evaluate(es + e) - evaluate(es); 0 when e is already a member.
  /// Counts as one evaluation.
  double marginal(EdgeIndex e, const EdgeSet& es) const;

 private:
  void bump() const {
    if (counter_ != nullptr) ++counter_->calls;
  }
  void check_edge_set(const EdgeSet& es) const;

  const DirectedGraph* graph_;
  UtilityKind kind_;
  EvalCounter* counter_ = nullptr;
};

/// f(s) = h(E(s)).
double sequence_value(const EdgeSetFunction& h, const Sequence& s);

/// f(s - z): value of s after deleting the elements of z.
double residual_value(const EdgeSetFunction& h, const Sequence& s,
                      std::span<const ElementId> z);

}  // namespace rosenets
