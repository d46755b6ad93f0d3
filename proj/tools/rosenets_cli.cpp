// Command line harness: dataset ingestion, (k, tau) experiment sweeps,
// approximation-ratio tables and randomized validation campaigns.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rosenets/bounds.hpp"
#include "rosenets/campaigns.hpp"
#include "rosenets/datasets.hpp"
#include "rosenets/experiment.hpp"
#include "rosenets/random_instances.hpp"

namespace {

using namespace rosenets;

DirectedGraph open_graph(const std::string& name) {
  if (name == "star-triangle") return star_triangle_graph();
  return load_graph_file(name);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

struct IngestArgs {
  std::string kind;
  std::string in_path;
  std::string out_path;
  std::string tasks_out;
  int min_item_count = 50;
  int min_user_items = 29;
  int min_path_len = 29;
  std::string path_length = "pages";
  std::string backclicks = "resolved";
};

int run_ingest(const IngestArgs& args) {
  IngestResult result;
  if (args.kind == "amazon") {
    PurchaseGraphOptions opts;
    opts.min_item_count = args.min_item_count;
    opts.min_user_items = args.min_user_items;
    result = build_purchase_graph(load_interaction_log_file(args.in_path), opts);
  } else if (args.kind == "wikispeedia") {
    PathGraphOptions opts;
    opts.min_path_len = args.min_path_len;
    opts.length_unit = args.path_length == "clicks" ? PathLengthUnit::kClicks
                                                    : PathLengthUnit::kPages;
    BackClickMode mode = args.backclicks == "drop" ? BackClickMode::kDrop
                                                   : BackClickMode::kResolve;
    result = build_path_graph(load_path_log_file(args.in_path, mode), opts);
  } else {  // edgelist: canonicalizing round-trip
    result.graph = load_graph_file(args.in_path);
  }

  save_graph_file(result.graph, args.out_path);
  std::string tasks_path = args.tasks_out.empty() ? args.out_path + ".tasks" : args.tasks_out;
  if (args.kind != "edgelist") save_tasks_file(result.tasks, tasks_path);

  std::cout << "n_elements=" << result.graph.n_elements()
            << " n_edges=" << result.graph.edge_count()
            << " n_tasks=" << result.tasks.size() << "\n";
  return 0;
}

struct RunArgs {
  std::string graph;
  std::string tasks;
  std::vector<std::string> algos = {"rosenets", "sequence"};
  std::string k;
  std::string tau = "0";
  std::string removal = "prefix";
  std::string utility = "coverage";
  std::string out;
  int jobs = 1;
  std::uint64_t seed = 0;
  bool no_history_seed = false;
};

int run_run(const RunArgs& args) {
  DirectedGraph g = open_graph(args.graph);
  std::vector<EvalTask> tasks;
  if (!args.tasks.empty()) tasks = load_tasks_file(args.tasks);

  ExperimentConfig config;
  config.algorithms.clear();
  for (const std::string& entry : args.algos) {
    std::istringstream parts(entry);
    std::string name;
    while (std::getline(parts, name, ',')) config.algorithms.push_back(parse_algorithm(name));
  }
  config.k_values = parse_int_list(args.k);
  config.tau_values = parse_int_list(args.tau);
  if (args.removal == "exact") {
    config.removal = ExperimentRemoval::kExact;
  } else if (args.removal == "prefix") {
    config.removal = ExperimentRemoval::kPrefix;
  } else if (args.removal == "none") {
    config.removal = ExperimentRemoval::kNone;
  } else {
    throw std::invalid_argument("unknown removal mode '" + args.removal + "'");
  }
  if (args.utility == "coverage") {
    config.utility = UtilityKind::kProbabilisticCoverage;
  } else if (args.utility == "modular") {
    config.utility = UtilityKind::kModularSum;
  } else {
    throw std::invalid_argument("unknown utility '" + args.utility + "'");
  }
  config.jobs = args.jobs;
  config.seed = args.seed;
  config.history_seeds_marginals = !args.no_history_seed;

  write_text(args.out, results_csv(run_experiment(g, tasks, config)));
  return 0;
}

struct BoundsArgs {
  std::string k;
  std::string tau;
  int d_in = 1;
  int d_out = 1;
  std::string out;
};

int run_bounds(const BoundsArgs& args) {
  write_text(args.out,
             bounds_table_csv(parse_int_list(args.k), parse_int_list(args.tau),
                              args.d_in, args.d_out));
  return 0;
}

struct ValidateArgs {
  int instances = 200;
  std::uint64_t seed = 1;
  int max_n = 6;
  int max_k = 4;
  int max_tau = 2;
  int gain_draws = 1000;
  int lemma_instances = 50;
  double corrupt_ratio = 1.0;
};

int run_validate(const ValidateArgs& args) {
  bool ok = true;
  auto report = [&ok](const std::string& name, const CampaignReport& r) {
    std::cout << name << ": run=" << r.run << " skipped=" << r.skipped
              << " violations=" << r.violations << (r.ok() ? " [ok]" : " [FAIL]") << "\n";
    if (!r.ok()) {
      std::cout << "  witness: " << r.first_witness << "\n";
      ok = false;
    }
  };

  CampaignParams params;
  params.instances = args.instances;
  params.seed = args.seed;
  params.max_n = args.max_n;
  params.max_k = args.max_k;
  params.max_tau = args.max_tau;
  params.ratio_corruption = args.corrupt_ratio;
  report("ratio-sandwich", sandwich_campaign(params));
  report("addition-gain", addition_gain_campaign(args.gain_draws, args.seed + 1));
  report("greedy-value-bound",
         greedy_bound_campaign(args.lemma_instances, args.seed + 2, args.max_n));
  report("robust-reduction",
         robust_reduction_campaign(args.lemma_instances, args.seed + 3, args.max_n,
                                   args.max_tau));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust sequence selection on weighted directed graphs"};
  app.require_subcommand(1);
  // Options may come from an INI-style file: rosenets --config exp.ini run,
  // with the keys under a [run] (or [bounds], ...) section.
  app.set_config("--config");

  IngestArgs ingest;
  CLI::App* cmd_ingest = app.add_subcommand("ingest", "Build a graph and task file");
  cmd_ingest->add_option("--kind", ingest.kind, "amazon, wikispeedia or edgelist")
      ->required()
      ->check(CLI::IsMember({"amazon", "wikispeedia", "edgelist"}));
  cmd_ingest->add_option("--in", ingest.in_path, "input file")->required();
  cmd_ingest->add_option("--out", ingest.out_path, "graph output path")->required();
  cmd_ingest->add_option("--tasks-out", ingest.tasks_out, "task output path");
  cmd_ingest->add_option("--min-item-count", ingest.min_item_count);
  cmd_ingest->add_option("--min-user-items", ingest.min_user_items);
  cmd_ingest->add_option("--min-path-len", ingest.min_path_len);
  cmd_ingest->add_option("--path-length", ingest.path_length)
      ->check(CLI::IsMember({"pages", "clicks"}));
  cmd_ingest->add_option("--backclicks", ingest.backclicks)
      ->check(CLI::IsMember({"resolved", "drop"}));

  RunArgs run;
  CLI::App* cmd_run = app.add_subcommand("run", "Sweep algorithms over (k, tau)");
  cmd_run->add_option("--graph", run.graph, "graph file or 'star-triangle'")->required();
  cmd_run->add_option("--tasks", run.tasks, "task file");
  cmd_run->add_option("--algos", run.algos, "comma list of algorithms")
      ->delimiter(',');
  cmd_run->add_option("--k", run.k, "k values, e.g. 5 or 3,5 or 11..20")->required();
  cmd_run->add_option("--tau", run.tau, "tau values");
  cmd_run->add_option("--removal", run.removal)
      ->check(CLI::IsMember({"exact", "prefix", "none"}));
  cmd_run->add_option("--utility", run.utility)
      ->check(CLI::IsMember({"coverage", "modular"}));
  cmd_run->add_option("--out", run.out, "CSV path, '-' for stdout");
  cmd_run->add_option("--jobs", run.jobs, "worker count");
  cmd_run->add_option("--seed", run.seed, "reserved for randomized baselines");
  cmd_run->add_flag("--no-history-seed", run.no_history_seed,
                    "do not let history edges seed marginals");

  BoundsArgs bounds;
  CLI::App* cmd_bounds = app.add_subcommand("bounds", "Approximation ratio table");
  cmd_bounds->add_option("--k", bounds.k, "k values")->required();
  cmd_bounds->add_option("--tau", bounds.tau, "tau values")->required();
  cmd_bounds->add_option("--d-in", bounds.d_in, "max in-degree")->required();
  cmd_bounds->add_option("--d-out", bounds.d_out, "max out-degree")->required();
  cmd_bounds->add_option("--out", bounds.out, "CSV path, '-' for stdout");

  ValidateArgs validate;
  CLI::App* cmd_validate =
      app.add_subcommand("validate", "Randomized ratio and inequality campaigns");
  cmd_validate->add_option("--instances", validate.instances);
  cmd_validate->add_option("--seed", validate.seed);
  cmd_validate->add_option("--max-n", validate.max_n);
  cmd_validate->add_option("--max-k", validate.max_k);
  cmd_validate->add_option("--max-tau", validate.max_tau);
  cmd_validate->add_option("--gain-draws", validate.gain_draws);
  cmd_validate->add_option("--lemma-instances", validate.lemma_instances);
  cmd_validate->add_option("--self-test-corrupt-ratio", validate.corrupt_ratio)
      ->group("");  // test hook, hidden from help

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_ingest->parsed()) return run_ingest(ingest);
    if (cmd_run->parsed()) return run_run(run);
    if (cmd_bounds->parsed()) return run_bounds(bounds);
    if (cmd_validate->parsed()) return run_validate(validate);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
