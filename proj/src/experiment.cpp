#include "rosenets/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "rosenets/algorithms.hpp"
#include "rosenets/robustness.hpp"

namespace rosenets {

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kRosenets: return "rosenets";
    case Algorithm::kSequence: return "sequence";
    case Algorithm::kOmega: return "omega";
    case Algorithm::kFrequency: return "frequency";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "rosenets") return Algorithm::kRosenets;
  if (name == "sequence") return Algorithm::kSequence;
  if (name == "omega") return Algorithm::kOmega;
  if (name == "frequency") return Algorithm::kFrequency;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

void ExperimentConfig::validate() const {
  if (algorithms.empty()) throw std::invalid_argument("no algorithms selected");
  if (k_values.empty()) throw std::invalid_argument("no k values");
  if (tau_values.empty()) throw std::invalid_argument("no tau values");
  int max_k = *std::max_element(k_values.begin(), k_values.end());
  for (int k : k_values) {
    if (k < 1) throw std::invalid_argument("k must be positive");
  }
  for (int tau : tau_values) {
    if (tau < 0) throw std::invalid_argument("tau must be non-negative");
    if (tau > max_k) throw std::invalid_argument("tau exceeds the largest k");
  }
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");
}

namespace {

struct Cell {
  Algorithm algorithm;
  int k = 0;
  int tau = 0;
};

struct TaskOutcome {
  TaskMetrics metrics;
  std::uint64_t eval_calls = 0;
  bool fell_back = false;
};

TaskOutcome run_cell_task(const DirectedGraph& g, const ExperimentConfig& config,
                          const Cell& cell, const EvalTask& task) {
  EdgeSetFunction h(g, config.utility);

  GreedyContext ctx;
  if (config.history_seeds_marginals) {
    ctx.base = task.history;
  } else {
    ctx.forbidden.assign(task.history.begin(), task.history.end());
  }

  std::size_t k = static_cast<std::size_t>(cell.k);
  std::size_t tau = static_cast<std::size_t>(cell.tau);
  AlgorithmResult result;
  switch (cell.algorithm) {
    case Algorithm::kRosenets:
      result = robust_greedy(g, h, k, std::min(tau, k), ctx);
      break;
    case Algorithm::kSequence:
      result = sequence_greedy_result(g, h, k, ctx);
      break;
    case Algorithm::kOmega:
      result = omega_result(g, h, k, ctx);
      break;
    case Algorithm::kFrequency:
      result.sequence = frequency(g, k, task.history);
      break;
  }

  TaskOutcome out;
  out.eval_calls = result.eval_calls;

  Sequence survivors = result.sequence;
  double utility = 0.0;
  switch (config.removal) {
    case ExperimentRemoval::kNone:
      utility = sequence_value(h, survivors);
      break;
    case ExperimentRemoval::kPrefix: {
      RemovalOutcome removal = prefix_removal(h, result.sequence, tau);
      survivors = remove_elements(result.sequence, removal.removed);
      utility = removal.residual;
      break;
    }
    case ExperimentRemoval::kExact: {
      auto removal = worst_case_removal(h, result.sequence, tau);
      if (!removal.has_value()) {
        removal = prefix_removal(h, result.sequence, tau);
        out.fell_back = true;
      }
      survivors = remove_elements(result.sequence, removal->removed);
      utility = removal->residual;
      break;
    }
  }

  out.metrics.accuracy = accuracy_score(survivors, task.truth);
  out.metrics.sequence = sequence_score(survivors, task.truth);
  out.metrics.utility = utility;
  return out;
}

void check_tasks(const DirectedGraph& g, const std::vector<EvalTask>& tasks) {
  for (const EvalTask& task : tasks) {
    for (ElementId v : task.history) {
      if (v < 0 || v >= g.n_elements())
        throw std::invalid_argument("task history id outside graph");
    }
    for (ElementId v : task.truth) {
      if (v < 0 || v >= g.n_elements())
        throw std::invalid_argument("task truth id outside graph");
    }
  }
}

}  // namespace

std::vector<ResultRow> run_experiment(const DirectedGraph& g,
                                      const std::vector<EvalTask>& tasks,
                                      const ExperimentConfig& config) {
  config.validate();
  check_tasks(g, tasks);

  std::vector<EvalTask> effective = tasks;
  if (effective.empty()) effective.push_back({});

  std::vector<Cell> cells;
  for (Algorithm a : config.algorithms) {
    for (int k : config.k_values) {
      for (int tau : config.tau_values) cells.push_back({a, k, tau});
    }
  }

  // One job per (cell, task); outcomes land in a fixed slot so worker
  // scheduling cannot influence the aggregate.
  std::vector<TaskOutcome> outcomes(cells.size() * effective.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= outcomes.size()) return;
      const Cell& cell = cells[i / effective.size()];
      const EvalTask& task = effective[i % effective.size()];
      outcomes[i] = run_cell_task(g, config, cell, task);
    }
  };
  int jobs = std::min<int>(config.jobs, static_cast<int>(outcomes.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<ResultRow> rows;
  rows.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    ResultRow row;
    row.algorithm = cells[c].algorithm;
    row.k = cells[c].k;
    row.tau = cells[c].tau;
    std::vector<TaskMetrics> per_task;
    double eval_sum = 0.0;
    for (std::size_t t = 0; t < effective.size(); ++t) {
      const TaskOutcome& o = outcomes[c * effective.size() + t];
      per_task.push_back(o.metrics);
      eval_sum += static_cast<double>(o.eval_calls);
      if (o.fell_back) row.status = "prefix_fallback";
    }
    row.metrics = aggregate(per_task);
    row.eval_calls_mean = eval_sum / static_cast<double>(effective.size());
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    std::string an = algorithm_name(a.algorithm);
    std::string bn = algorithm_name(b.algorithm);
    if (an != bn) return an < bn;
    if (a.k != b.k) return a.k < b.k;
    return a.tau < b.tau;
  });
  return rows;
}

namespace {

void append_float(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  out += buf;
}

}  // namespace

std::string results_csv(const std::vector<ResultRow>& rows) {
  std::string out =
      "algorithm,k,tau,accuracy,sequence_score,utility,n_tasks,eval_calls_mean,status\n";
  for (const ResultRow& r : rows) {
    out += algorithm_name(r.algorithm) + "," + std::to_string(r.k) + "," +
           std::to_string(r.tau) + ",";
    append_float(out, r.metrics.accuracy);
    out += ",";
    append_float(out, r.metrics.sequence_score);
    out += ",";
    append_float(out, r.metrics.utility);
    out += "," + std::to_string(r.metrics.n_tasks) + ",";
    append_float(out, r.eval_calls_mean);
    out += "," + r.status + "\n";
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  if (text.empty()) throw std::invalid_argument("empty integer list");
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token = text.substr(start, comma == std::string::npos ? comma : comma - start);
    start = comma == std::string::npos ? text.size() + 1 : comma + 1;
    std::size_t dots = token.find("..");
    auto parse_one = [&](const std::string& s) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer '" + s + "'");
      return v;
    };
    if (dots == std::string::npos) {
      out.push_back(parse_one(token));
    } else {
      int lo = parse_one(token.substr(0, dots));
      int hi = parse_one(token.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("descending range '" + token + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  return out;
}

}  // namespace rosenets
