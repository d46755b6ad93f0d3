#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "rosenets/graph.hpp"
#include "rosenets/oracle.hpp"
#include "rosenets/utility.hpp"

namespace rosenets {

/// Does a single greedy step keep pace with a whole block s2? The proven
/// form compares the best single-edge marginal against the appended block
/// gain scaled by 1 / (d_in |s2|), with self-loops counted in d_in (every
/// new induced edge has its head in s2, giving at most d_in |s2| of them).
/// The per-vertex readings and the reversed composition order are computed
/// alongside for reporting; they do not hold universally.
struct AdditionGainCheck {
  bool holds = false;  // edge form vs appended gain; the asserted verdict
  double gain_append = 0.0;        // f(s1 + s2) - f(s1)
  double gain_prepend = 0.0;       // f(s2 + s1) - f(s1)
  double best_edge_marginal = 0.0;  // max_e h(e | E(s1))
  double best_vertex_append = 0.0;  // max_v f(s1 + v) - f(s1)
  double best_vertex_prepend = 0.0;  // max_v f(v + s1) - f(s1)
  double threshold = 0.0;          // gain_append / (d_in |s2|)
  bool vertex_append_holds = false;
  bool vertex_prepend_holds = false;
  bool prepend_order_holds = false;  // edge form vs prepended gain
  int d_in = 0;
};

/// Requires s1, s2 disjoint and s2 non-empty.
AdditionGainCheck check_addition_gain(const EdgeSetFunction& h, const Sequence& s1,
                                      const Sequence& s2);

/// For the greedy output s and every subsequence s' with f(s') > 0 and
/// k' = |s| - |s'| >= 1, value c = f(s') / f(s) certifies
///   f(s) >= (e^{k'/(d k)} - 1) / (e^{k'/(d k)} - c) * f(opt),
/// where opt is the exhaustive non-robust optimum at |s| elements and d the
/// self-loop-inclusive max in-degree. k' = 0 degenerates to a zero bound.
struct GreedyValueBoundCheck {
  bool holds = true;
  bool skipped = false;  // zero greedy value or oracle infeasible
  int checked = 0;
  double greedy_value = 0.0;
  double optimal_value = 0.0;
  // Tightest (bound - greedy_value); positive means a violation.
  double worst_slack = 0.0;
  Sequence witness;  // violating subsequence when !holds
};

GreedyValueBoundCheck check_greedy_value_bound(const DirectedGraph& g,
                                               const EdgeSetFunction& h, std::size_t k);

/// (e^{k'/(d k)} - 1) / (e^{k'/(d k)} - c), the certificate factor the
/// bound applies to the optimum; k' = 0 degenerates to 0.
double greedy_bound_coefficient(std::size_t k_prime, std::size_t k, int d_in, double c);

/// Worst-case value of the robust optimum never beats the non-robust
/// optimum on the reduced instance: g_tau(opt(V, k, tau)) <=
/// f(opt(V - z, k - tau, 0)) for any |z| <= tau.
struct RobustReductionCheck {
  bool holds = true;
  bool skipped = false;  // oracle infeasible on either side
  double robust_side = 0.0;
  double reduced_side = 0.0;
  Sequence robust_optimum;
  Sequence reduced_optimum;
};

RobustReductionCheck check_robust_reduction(const EdgeSetFunction& h, std::size_t k,
                                            std::size_t tau,
                                            std::span<const ElementId> z);

}  // namespace rosenets
