#include "rosenets/algorithms.hpp"

#include <algorithm>
#include <stdexcept>

namespace rosenets {

namespace {

class GreedyState {
 public:
  GreedyState(const DirectedGraph& g, const EdgeSetFunction& h, const GreedyContext& ctx)
      : g_(g), h_(h), in_seq_(static_cast<std::size_t>(g.n_elements()), false),
        forbidden_(static_cast<std::size_t>(g.n_elements()), false),
        es_(g.edge_count()) {
    for (ElementId v : ctx.forbidden) forbidden_[check(v)] = true;
    for (ElementId v : ctx.base) {
      if (forbidden_[check(v)])
        throw std::invalid_argument("base sequence intersects forbidden set");
    }
    for (ElementId v : ctx.base) append(v);
    base_size_ = ctx.base.size();
  }

  bool selected(ElementId v) const { return in_seq_[static_cast<std::size_t>(v)]; }
  bool forbidden(ElementId v) const { return forbidden_[static_cast<std::size_t>(v)]; }

  // Adds v and every edge it induces. v goes last, so only in-edges from
  // already selected elements (and its self-loop) become induced.
  void append(ElementId v) {
    seq_.push_back(v);
    in_seq_[static_cast<std::size_t>(v)] = true;
    for (EdgeIndex e : g_.in_edges(v)) {
      const Edge& ed = g_.edge(e);
      if (ed.is_self_loop() || selected(ed.tail)) es_.add(e);
    }
  }

  // Argmax candidate edge; single_slot restricts to edges that append one
  // element. Edge-index order makes ties resolve to the smallest (tail,
  // head) pair.
  std::optional<EdgeIndex> best_candidate(bool single_slot) const {
    std::optional<EdgeIndex> best;
    double best_gain = 0.0;
    for (EdgeIndex e = 0; e < g_.edge_count(); ++e) {
      const Edge& ed = g_.edge(e);
      if (selected(ed.head) || forbidden(ed.head)) continue;
      if (single_slot) {
        if (!ed.is_self_loop() && !selected(ed.tail)) continue;
      } else {
        if (forbidden(ed.tail)) continue;
      }
      double gain = h_.marginal(e, es_);
      if (!best.has_value() || gain > best_gain) {
        best = e;
        best_gain = gain;
      }
    }
    return best;
  }

  Sequence take(EdgeIndex e, std::size_t slots) {
    const Edge& ed = g_.edge(e);
    Sequence added;
    if (ed.is_self_loop() || selected(ed.tail)) {
      append(ed.head);
      added.append(ed.head);
    } else {
      if (slots < 2) throw std::logic_error("two-element step with one slot");
      append(ed.tail);
      append(ed.head);
      added.append(ed.tail);
      added.append(ed.head);
    }
    return added;
  }

 private:
  std::size_t check(ElementId v) const {
    if (v < 0 || v >= g_.n_elements())
      throw std::out_of_range("element id out of range");
    return static_cast<std::size_t>(v);
  }

  const DirectedGraph& g_;
  const EdgeSetFunction& h_;
  std::vector<ElementId> seq_;
  std::vector<bool> in_seq_;
  std::vector<bool> forbidden_;
  EdgeSet es_;
  std::size_t base_size_ = 0;
};

}  // namespace

Sequence sequence_greedy(const DirectedGraph& g, const EdgeSetFunction& h,
                         std::size_t budget, const GreedyContext& ctx) {
  GreedyState state(g, h, ctx);
  Sequence out;
  while (out.size() < budget) {
    std::size_t slots = budget - out.size();
    auto e = state.best_candidate(slots == 1);
    if (!e.has_value()) break;  // candidates exhausted; shorter result
    for (ElementId v : state.take(*e, slots)) out.append(v);
  }
  return out;
}

AlgorithmResult robust_greedy(const DirectedGraph& g, const EdgeSetFunction& h,
                         std::size_t k, std::size_t tau, const GreedyContext& ctx) {
  if (tau > k) throw std::invalid_argument("tau exceeds cardinality budget");
  EvalCounter counter;
  EdgeSetFunction fn = h;
  fn.attach_counter(&counter);

  GreedyContext phase1 = ctx;
  Sequence first = sequence_greedy(g, fn, tau, phase1);

  GreedyContext phase2;  // second phase ignores history edges entirely
  phase2.forbidden = ctx.forbidden;
  for (ElementId v : ctx.base) phase2.forbidden.push_back(v);
  for (ElementId v : first) phase2.forbidden.push_back(v);
  Sequence second = sequence_greedy(g, fn, k - tau, phase2);

  AlgorithmResult result;
  result.sequence = first;
  for (ElementId v : second) result.sequence.append(v);
  result.eval_calls = counter.calls;
  result.phase_boundary = first.size();
  return result;
}

AlgorithmResult sequence_greedy_result(const DirectedGraph& g, const EdgeSetFunction& h,
                                       std::size_t k, const GreedyContext& ctx) {
  EvalCounter counter;
  EdgeSetFunction fn = h;
  fn.attach_counter(&counter);
  AlgorithmResult result;
  result.sequence = sequence_greedy(g, fn, k, ctx);
  result.eval_calls = counter.calls;
  return result;
}

namespace {

// Kahn's algorithm over the non-loop edges among members, smallest id
// first. Stuck (cyclic) elements are emitted in insertion order.
std::vector<ElementId> topo_order(const DirectedGraph& g,
                                  const std::vector<ElementId>& members,
                                  bool* cycle_warning) {
  std::vector<std::int32_t> member_pos(static_cast<std::size_t>(g.n_elements()), -1);
  for (std::size_t i = 0; i < members.size(); ++i)
    member_pos[static_cast<std::size_t>(members[i])] = static_cast<std::int32_t>(i);

  std::vector<int> indeg(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (EdgeIndex e : g.in_edges(members[i])) {
      const Edge& ed = g.edge(e);
      if (!ed.is_self_loop() && member_pos[static_cast<std::size_t>(ed.tail)] >= 0) ++indeg[i];
    }
  }

  std::vector<bool> done(members.size(), false);
  std::vector<ElementId> order;
  order.reserve(members.size());
  while (order.size() < members.size()) {
    // Smallest ready element id; ids are unique so scanning members works.
    std::int32_t pick = -1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (done[i] || indeg[i] > 0) continue;
      if (pick < 0 || members[i] < members[static_cast<std::size_t>(pick)])
        pick = static_cast<std::int32_t>(i);
    }
    if (pick < 0) {
      // Cycle among the remaining members: release the earliest inserted.
      if (cycle_warning != nullptr) *cycle_warning = true;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (!done[i]) {
          pick = static_cast<std::int32_t>(i);
          break;
        }
      }
    }
    std::size_t p = static_cast<std::size_t>(pick);
    done[p] = true;
    order.push_back(members[p]);
    for (EdgeIndex e : g.out_edges(members[p])) {
      const Edge& ed = g.edge(e);
      std::int32_t hp = member_pos[static_cast<std::size_t>(ed.head)];
      if (!ed.is_self_loop() && hp >= 0 && !done[static_cast<std::size_t>(hp)])
        --indeg[static_cast<std::size_t>(hp)];
    }
  }
  return order;
}

double reordered_value(const DirectedGraph& g, const EdgeSetFunction& h,
                       const Sequence& base, const std::vector<ElementId>& members,
                       bool* cycle_warning) {
  Sequence seq = base;
  for (ElementId v : topo_order(g, members, cycle_warning)) seq.append(v);
  return sequence_value(h, seq);
}

}  // namespace

Sequence omega(const DirectedGraph& g, const EdgeSetFunction& h, std::size_t k,
               const GreedyContext& ctx, bool* cycle_warning) {
  std::vector<bool> blocked(static_cast<std::size_t>(g.n_elements()), false);
  for (ElementId v : ctx.forbidden) blocked[static_cast<std::size_t>(v)] = true;
  for (ElementId v : ctx.base) blocked[static_cast<std::size_t>(v)] = true;

  std::vector<ElementId> members;  // insertion order
  while (members.size() < k) {
    std::optional<ElementId> best;
    double best_value = 0.0;
    for (ElementId v = 0; v < g.n_elements(); ++v) {
      if (blocked[static_cast<std::size_t>(v)]) continue;
      members.push_back(v);
      double value = reordered_value(g, h, ctx.base, members, nullptr);
      members.pop_back();
      if (!best.has_value() || value > best_value) {
        best = v;
        best_value = value;
      }
    }
    if (!best.has_value()) break;
    members.push_back(*best);
    blocked[static_cast<std::size_t>(*best)] = true;
  }
  return Sequence(topo_order(g, members, cycle_warning));
}

AlgorithmResult omega_result(const DirectedGraph& g, const EdgeSetFunction& h,
                             std::size_t k, const GreedyContext& ctx) {
  EvalCounter counter;
  EdgeSetFunction fn = h;
  fn.attach_counter(&counter);
  AlgorithmResult result;
  result.sequence = omega(g, fn, k, ctx);
  result.eval_calls = counter.calls;
  return result;
}

Sequence frequency(const DirectedGraph& g, std::size_t k, const Sequence& history) {
  bool use_loops = g.has_self_loops();
  std::vector<std::pair<double, ElementId>> ranked;
  for (ElementId v = 0; v < g.n_elements(); ++v) {
    if (history.contains(v)) continue;
    double pop = 0.0;
    if (use_loops) {
      if (auto loop = g.self_loop(v)) pop = g.edge(*loop).weight;
    } else {
      for (EdgeIndex e : g.in_edges(v)) pop += g.edge(e).weight;
    }
    ranked.emplace_back(pop, v);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  Sequence out;
  for (std::size_t i = 0; i < ranked.size() && i < k; ++i) out.append(ranked[i].second);
  return out;
}

}  // namespace rosenets
