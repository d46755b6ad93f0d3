#include "rosenets/utility.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace rosenets {

void EdgeSetFunction::check_edge_set(const EdgeSet& es) const {
  if (es.universe() != graph_->edge_count())
    throw std::invalid_argument("edge set bound to a different graph");
}

double EdgeSetFunction::evaluate(const EdgeSet& es) const {
  check_edge_set(es);
  bump();
  if (kind_ == UtilityKind::kModularSum) {
    double total = 0.0;
    for (EdgeIndex e : es.sorted_members()) total += graph_->edge(e).weight;
    return total;
  }
  // Coverage: group member edges by head. Members are visited in edge-index
  // order (head-contiguous per tail is not guaranteed, so accumulate into a
  // per-head list first) to keep the float result independent of insertion
  // order.
  std::vector<std::pair<ElementId, double>> survive;  // head -> prod(1 - w)
  for (EdgeIndex e : es.sorted_members()) {
    const Edge& ed = graph_->edge(e);
    auto it = survive.begin();
    for (; it != survive.end(); ++it) {
      if (it->first == ed.head) break;
    }
    if (it == survive.end()) {
      survive.emplace_back(ed.head, 1.0 - ed.weight);
    } else {
      it->second *= 1.0 - ed.weight;
    }
  }
  double total = 0.0;
  for (const auto& [head, p] : survive) total += 1.0 - p;
  return total;
}

double EdgeSetFunction::marginal(EdgeIndex e, const EdgeSet& es) const {
  check_edge_set(es);
  if (e < 0 || e >= graph_->edge_count())
    throw std::out_of_range("edge index outside graph");
  bump();
  if (es.contains(e)) return 0.0;
  const Edge& ed = graph_->edge(e);
  if (kind_ == UtilityKind::kModularSum) return ed.weight;
  double p = 1.0;
  for (EdgeIndex in : graph_->in_edges(ed.head)) {
    if (es.contains(in)) p *= 1.0 - graph_->edge(in).weight;
  }
  return ed.weight * p;
}

double sequence_value(const EdgeSetFunction& h, const Sequence& s) {
  return h.evaluate(induced_edge_set(h.graph(), s));
}

double residual_value(const EdgeSetFunction& h, const Sequence& s,
                      std::span<const ElementId> z) {
  return sequence_value(h, remove_elements(s, z));
}

}  // namespace rosenets
