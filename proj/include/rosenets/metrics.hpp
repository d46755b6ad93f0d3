#pragma once

#include <vector>

#include "rosenets/graph.hpp"

namespace rosenets {

/// Number of elements the prediction and the truth share, order ignored.
int accuracy_score(const Sequence& pred, const Sequence& truth);

/// Number of ordered pairs (a, b) with a before b in both sequences,
/// over the elements they share.
int sequence_score(const Sequence& pred, const Sequence& truth);

struct TaskMetrics {
  double accuracy = 0.0;
  double sequence = 0.0;
  double utility = 0.0;
};

struct MetricRow {
  double accuracy = 0.0;
  double sequence_score = 0.0;
  double utility = 0.0;
  std::size_t n_tasks = 0;
};

/// Arithmetic mean per metric; throws on an empty list.
MetricRow aggregate(const std::vector<TaskMetrics>& rows);

}  // namespace rosenets
