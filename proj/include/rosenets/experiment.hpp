#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rosenets/datasets.hpp"
#include "rosenets/graph.hpp"
#include "rosenets/metrics.hpp"
#include "rosenets/utility.hpp"

namespace rosenets {

enum class Algorithm { kRosenets, kSequence, kOmega, kFrequency };

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

enum class ExperimentRemoval { kExact, kPrefix, kNone };

struct ExperimentConfig {
  std::vector<Algorithm> algorithms = {Algorithm::kRosenets, Algorithm::kSequence};
  std::vector<int> k_values;
  std::vector<int> tau_values = {0};
  ExperimentRemoval removal = ExperimentRemoval::kPrefix;
  UtilityKind utility = UtilityKind::kProbabilisticCoverage;
  int jobs = 1;
  std::uint64_t seed = 0;         // reserved for randomized baselines
  bool history_seeds_marginals = true;

  void validate() const;  // throws std::invalid_argument
};

struct ResultRow {
  Algorithm algorithm = Algorithm::kSequence;
  int k = 0;
  int tau = 0;
  MetricRow metrics;
  double eval_calls_mean = 0.0;
  // "ok", or "prefix_fallback" when the exact adversary hit its cap.
  std::string status = "ok";
};

/// Runs every configured (algorithm, k, tau) cell over the tasks, applies
/// the removal mode, scores survivors against the truth and averages. Rows
/// come back sorted by (algorithm name, k, tau), one per cell, and are
/// byte-deterministic for any worker count. An empty task list behaves as
/// one task with empty history and truth.
std::vector<ResultRow> run_experiment(const DirectedGraph& g,
                                      const std::vector<EvalTask>& tasks,
                                      const ExperimentConfig& config);

/// Fixed-order CSV; floats printed with six decimals.
std::string results_csv(const std::vector<ResultRow>& rows);

/// "3", "1,4,9" or "2..7" (inclusive).
std::vector<int> parse_int_list(const std::string& text);

}  // namespace rosenets
