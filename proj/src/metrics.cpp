#include "rosenets/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace rosenets {

int accuracy_score(const Sequence& pred, const Sequence& truth) {
  int hits = 0;
  for (ElementId v : pred) {
    if (truth.contains(v)) ++hits;
  }
  return hits;
}

int sequence_score(const Sequence& pred, const Sequence& truth) {
  std::unordered_map<ElementId, std::size_t> truth_pos;
  truth_pos.reserve(truth.size());
  for (std::size_t i = 0; i < truth.size(); ++i) truth_pos[truth[i]] = i;

  // Project the shared elements onto their truth positions in prediction
  // order; agreeing pairs are exactly the non-inverted position pairs.
  std::vector<std::size_t> projected;
  for (ElementId v : pred) {
    auto it = truth_pos.find(v);
    if (it != truth_pos.end()) projected.push_back(it->second);
  }
  int agree = 0;
  for (std::size_t i = 0; i < projected.size(); ++i) {
    for (std::size_t j = i + 1; j < projected.size(); ++j) {
      if (projected[i] < projected[j]) ++agree;
    }
  }
  return agree;
}

MetricRow aggregate(const std::vector<TaskMetrics>& rows) {
  if (rows.empty()) throw std::invalid_argument("no task metrics to aggregate");
  MetricRow out;
  for (const TaskMetrics& r : rows) {
    out.accuracy += r.accuracy;
    out.sequence_score += r.sequence;
    out.utility += r.utility;
  }
  double n = static_cast<double>(rows.size());
  out.accuracy /= n;
  out.sequence_score /= n;
  out.utility /= n;
  out.n_tasks = rows.size();
  return out;
}

}  // namespace rosenets
