#include "rosenets/checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rosenets/algorithms.hpp"

namespace rosenets {

namespace {

constexpr double kTol = 1e-9;

Sequence concat(const Sequence& a, const Sequence& b) {
  Sequence out = a;
  for (ElementId v : b) out.append(v);
  return out;
}

}  // namespace

AdditionGainCheck check_addition_gain(const EdgeSetFunction& h, const Sequence& s1,
                                      const Sequence& s2) {
  if (s2.empty()) throw std::invalid_argument("s2 must be non-empty");
  for (ElementId v : s2) {
    if (s1.contains(v)) throw std::invalid_argument("s1 and s2 must be disjoint");
  }
  const DirectedGraph& g = h.graph();

  AdditionGainCheck out;
  out.d_in = std::max(1, degree_stats(g, /*include_self_loops=*/true).max_in);

  double base = sequence_value(h, s1);
  out.gain_append = sequence_value(h, concat(s1, s2)) - base;
  out.gain_prepend = sequence_value(h, concat(s2, s1)) - base;

  EdgeSet base_edges = induced_edge_set(g, s1);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    out.best_edge_marginal = std::max(out.best_edge_marginal, h.marginal(e, base_edges));

  for (ElementId v = 0; v < g.n_elements(); ++v) {
    if (s1.contains(v)) continue;
    Sequence appended = s1;
    appended.append(v);
    out.best_vertex_append =
        std::max(out.best_vertex_append, sequence_value(h, appended) - base);
    Sequence prepended;
    prepended.append(v);
    for (ElementId w : s1) prepended.append(w);
    out.best_vertex_prepend =
        std::max(out.best_vertex_prepend, sequence_value(h, prepended) - base);
  }

  double denom = static_cast<double>(out.d_in) * static_cast<double>(s2.size());
  out.threshold = out.gain_append / denom;
  double prepend_threshold = out.gain_prepend / denom;

  out.holds = out.best_edge_marginal >= out.threshold - kTol;
  out.vertex_append_holds = out.best_vertex_append >= out.threshold - kTol;
  out.vertex_prepend_holds = out.best_vertex_prepend >= prepend_threshold - kTol;
  out.prepend_order_holds = out.best_edge_marginal >= prepend_threshold - kTol;
  return out;
}

double greedy_bound_coefficient(std::size_t k_prime, std::size_t k, int d_in,
                                double c) {
  if (k_prime == 0) return 0.0;
  double ex = std::exp(static_cast<double>(k_prime) /
                       (static_cast<double>(d_in) * static_cast<double>(k)));
  return (ex - 1.0) / (ex - c);
}

GreedyValueBoundCheck check_greedy_value_bound(const DirectedGraph& g,
                                               const EdgeSetFunction& h, std::size_t k) {
  GreedyValueBoundCheck out;
  Sequence s = sequence_greedy(g, h, k);
  out.greedy_value = sequence_value(h, s);
  if (s.empty() || out.greedy_value <= 0.0) {
    out.skipped = true;
    return out;
  }
  try {
    out.optimal_value = optimal_robust_sequence(h, s.size(), 0).nonrobust_value;
  } catch (const OracleInfeasibleError&) {
    out.skipped = true;
    return out;
  }

  int d_in = std::max(1, degree_stats(g, /*include_self_loops=*/true).max_in);
  std::size_t n = s.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<ElementId> items;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) items.push_back(s[i]);
    }
    std::size_t k_prime = n - items.size();
    Sequence sub(std::move(items));
    double bound = 0.0;
    if (k_prime > 0) {
      double sub_value = sequence_value(h, sub);
      if (sub_value <= 0.0) continue;  // c must lie in (0, 1]
      double c = sub_value / out.greedy_value;
      bound = greedy_bound_coefficient(k_prime, n, d_in, c) * out.optimal_value;
    }
    ++out.checked;
    double slack = bound - out.greedy_value;
    if (slack > out.worst_slack) {
      out.worst_slack = slack;
      out.witness = sub;
    }
    if (slack > kTol) out.holds = false;
  }
  return out;
}

RobustReductionCheck check_robust_reduction(const EdgeSetFunction& h, std::size_t k,
                                            std::size_t tau,
                                            std::span<const ElementId> z) {
  if (z.size() > tau) throw std::invalid_argument("|z| must not exceed tau");
  if (tau > k) throw std::invalid_argument("tau exceeds k");
  RobustReductionCheck out;
  try {
    OracleSolution robust = optimal_robust_sequence(h, k, tau);
    OracleSolution reduced = optimal_robust_sequence(h, k - tau, 0, false, z);
    out.robust_side = robust.robust_value;
    out.reduced_side = reduced.nonrobust_value;
    out.robust_optimum = robust.sequence;
    out.reduced_optimum = reduced.sequence;
    out.holds = out.robust_side <= out.reduced_side + kTol;
  } catch (const OracleInfeasibleError&) {
    out.skipped = true;
  }
  return out;
}

}  // namespace rosenets
