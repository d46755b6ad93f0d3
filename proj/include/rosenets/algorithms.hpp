#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

#include "rosenets/graph.hpp"
#include "rosenets/utility.hpp"

namespace rosenets {

/// Shared state for one greedy phase. base is a virtual prefix: its
/// elements are never re-selected but its edges into candidates count
/// toward marginals. forbidden elements may neither be added nor used as
/// edge tails; base and forbidden must be disjoint.
struct GreedyContext {
  std::vector<ElementId> forbidden;
  Sequence base;
};

struct AlgorithmResult {
  Sequence sequence;
  std::uint64_t eval_calls = 0;
  // Index splitting the first selection phase from the second.
  std::optional<std::size_t> phase_boundary;
};

/// Edge-greedy sequence selection. Repeatedly takes the candidate edge of
/// maximum marginal gain against the edges induced so far, appending its
/// head (and, when new, its tail first). When exactly one slot remains
/// only edges that add a single element are candidates: self-loops and
/// edges whose tail is already selected. Ties break on smaller tail id,
/// then smaller head id. Returns the newly selected elements, fewer than
/// budget when candidates run out.
Sequence sequence_greedy(const DirectedGraph& g, const EdgeSetFunction& h,
                         std::size_t budget, const GreedyContext& ctx = {});

/// Two-phase robust greedy: a tau-element phase over all elements, then an
/// independent (k - tau)-element phase that treats the first phase's picks
/// as forbidden and its edges as invisible. tau = 0 degenerates to
/// sequence_greedy. ctx carries the experiment history; phase two forbids
/// ctx.base in addition to the first phase.
AlgorithmResult robust_greedy(const DirectedGraph& g, const EdgeSetFunction& h,
                         std::size_t k, std::size_t tau,
                         const GreedyContext& ctx = {});

/// Non-robust baseline wrapper: one greedy run with an eval counter.
AlgorithmResult sequence_greedy_result(const DirectedGraph& g, const EdgeSetFunction& h,
                                       std::size_t k, const GreedyContext& ctx = {});

/// Set-style baseline: repeatedly adds the element maximizing the value of
/// the topologically reordered selection. On a cycle among selected
/// elements the sort falls back to insertion order for the stuck elements
/// and cycle_warning, when given, is set. Returns the final topological
/// order of the new elements.
Sequence omega(const DirectedGraph& g, const EdgeSetFunction& h, std::size_t k,
               const GreedyContext& ctx = {}, bool* cycle_warning = nullptr);

AlgorithmResult omega_result(const DirectedGraph& g, const EdgeSetFunction& h,
                             std::size_t k, const GreedyContext& ctx = {});

/// Popularity baseline: top-k elements not in history, ranked by self-loop
/// weight when the graph has self-loops and by weighted in-degree
/// otherwise; ties break on ascending id.
Sequence frequency(const DirectedGraph& g, std::size_t k, const Sequence& history);

}  // namespace rosenets
