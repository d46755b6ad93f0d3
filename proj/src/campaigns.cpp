#include "rosenets/campaigns.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rosenets/algorithms.hpp"
#include "rosenets/bounds.hpp"
#include "rosenets/checks.hpp"
#include "rosenets/oracle.hpp"
#include "rosenets/robustness.hpp"

namespace rosenets {

namespace {

constexpr double kTol = 1e-9;

std::string sequence_str(const Sequence& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

std::string graph_str(const DirectedGraph& g) {
  std::ostringstream out;
  out << "n=" << g.n_elements() << " edges{";
  for (const Edge& e : g.edges())
    out << " (" << e.tail << "," << e.head << "," << e.weight << ")";
  out << " }";
  return out.str();
}

DirectedGraph draw_graph(std::mt19937_64& rng, int max_n, int min_n) {
  RandomGraphSpec spec;
  spec.n = min_n + static_cast<int>(uniform_index(
                       rng, static_cast<std::uint64_t>(max_n - min_n + 1)));
  spec.edge_prob = uniform_real(rng, 0.2, 0.6);
  spec.acyclic = true;
  spec.loops = SelfLoopMode::kAll;
  return random_graph(rng, spec);
}

}  // namespace

CampaignReport sandwich_campaign(const CampaignParams& params) {
  CampaignReport report;
  int hi_k = std::min(params.max_k, params.max_n);
  if (hi_k < params.min_k) throw std::invalid_argument("max_n below min_k");
  std::mt19937_64 rng(params.seed);
  for (int i = 0; i < params.instances; ++i) {
    int k = params.min_k +
            static_cast<int>(uniform_index(
                rng, static_cast<std::uint64_t>(hi_k - params.min_k + 1)));
    DirectedGraph g = draw_graph(rng, params.max_n, /*min_n=*/std::max(3, k));
    int tau = params.min_tau +
              static_cast<int>(uniform_index(
                  rng, static_cast<std::uint64_t>(params.max_tau - params.min_tau + 1)));
    tau = std::min(tau, k);
    UtilityKind kind = uniform_index(rng, 2) == 0 ? UtilityKind::kProbabilisticCoverage
                                                  : UtilityKind::kModularSum;
    EdgeSetFunction h(g, kind);

    DegreeStats degrees = degree_stats(g, /*include_self_loops=*/false);
    if (degrees.max_in < 1) {
      ++report.skipped;
      continue;
    }

    OracleSolution opt;
    try {
      opt = optimal_robust_sequence(h, static_cast<std::size_t>(k),
                                    static_cast<std::size_t>(tau));
    } catch (const OracleInfeasibleError&) {
      ++report.skipped;
      continue;
    }

    AlgorithmResult algo = robust_greedy(g, h, static_cast<std::size_t>(k),
                                    static_cast<std::size_t>(tau));
    if (algo.eval_calls > 4 * static_cast<std::uint64_t>(k) *
                              static_cast<std::uint64_t>(g.edge_count()))
      ++report.eval_budget_breaches;
    auto removal = worst_case_removal(h, algo.sequence, static_cast<std::size_t>(tau));
    double achieved = removal->residual;

    BoundConstants c = make_bound_constants(k, tau, degrees.max_in, degrees.max_out);
    double ratio = approximation_ratio(c) * params.ratio_corruption;

    ++report.run;
    if (achieved + kTol < ratio * opt.robust_value) {
      ++report.violations;
      if (report.first_witness.empty()) {
        std::ostringstream w;
        w << "k=" << k << " tau=" << tau
          << " kind=" << (kind == UtilityKind::kModularSum ? "modular" : "coverage")
          << " ratio=" << ratio << " achieved=" << achieved
          << " optimum=" << opt.robust_value << " greedy=" << sequence_str(algo.sequence)
          << " opt_seq=" << sequence_str(opt.sequence) << " " << graph_str(g);
        report.first_witness = w.str();
      }
    }
  }
  return report;
}

CampaignReport addition_gain_campaign(int draws, std::uint64_t seed, int max_n) {
  CampaignReport report;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < draws; ++i) {
    DirectedGraph g = draw_graph(rng, max_n, /*min_n=*/3);
    EdgeSetFunction h(g, uniform_index(rng, 2) == 0 ? UtilityKind::kProbabilisticCoverage
                                                    : UtilityKind::kModularSum);
    std::size_t n = static_cast<std::size_t>(g.n_elements());
    std::size_t total = 1 + uniform_index(rng, n - 1);  // |s1| + |s2| <= n, s2 nonempty
    Sequence both = random_sequence(rng, g, total);
    std::size_t split = uniform_index(rng, total);  // s2 gets total - split >= 1
    Sequence s1, s2;
    for (std::size_t j = 0; j < both.size(); ++j)
      (j < split ? s1 : s2).append(both[j]);

    AdditionGainCheck check = check_addition_gain(h, s1, s2);
    ++report.run;
    if (!check.holds) {
      ++report.violations;
      if (report.first_witness.empty()) {
        std::ostringstream w;
        w << "s1=" << sequence_str(s1) << " s2=" << sequence_str(s2)
          << " best_edge=" << check.best_edge_marginal << " threshold=" << check.threshold
          << " " << graph_str(g);
        report.first_witness = w.str();
      }
    }
  }
  return report;
}

CampaignReport greedy_bound_campaign(int instances, std::uint64_t seed, int max_n) {
  CampaignReport report;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < instances; ++i) {
    DirectedGraph g = draw_graph(rng, max_n, /*min_n=*/3);
    EdgeSetFunction h(g, uniform_index(rng, 2) == 0 ? UtilityKind::kProbabilisticCoverage
                                                    : UtilityKind::kModularSum);
    std::size_t k = 2 + uniform_index(rng, static_cast<std::uint64_t>(g.n_elements()) - 1);

    GreedyValueBoundCheck check = check_greedy_value_bound(g, h, k);
    if (check.skipped) {
      ++report.skipped;
      continue;
    }
    ++report.run;
    if (!check.holds) {
      ++report.violations;
      if (report.first_witness.empty()) {
        std::ostringstream w;
        w << "k=" << k << " greedy=" << check.greedy_value
          << " optimum=" << check.optimal_value << " slack=" << check.worst_slack
          << " subsequence=" << sequence_str(check.witness) << " " << graph_str(g);
        report.first_witness = w.str();
      }
    }
  }
  return report;
}

CampaignReport robust_reduction_campaign(int instances, std::uint64_t seed, int max_n,
                                         int max_tau) {
  CampaignReport report;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < instances; ++i) {
    DirectedGraph g = draw_graph(rng, max_n, /*min_n=*/3);
    EdgeSetFunction h(g, uniform_index(rng, 2) == 0 ? UtilityKind::kProbabilisticCoverage
                                                    : UtilityKind::kModularSum);
    int n = g.n_elements();
    for (int tau = 0; tau <= std::min(max_tau, n - 1); ++tau) {
      std::size_t k = static_cast<std::size_t>(
          tau + 1 + static_cast<int>(uniform_index(
                        rng, static_cast<std::uint64_t>(n - tau))));
      // Every removal set of size <= tau.
      std::vector<ElementId> z;
      auto sweep = [&](auto&& self, ElementId from) -> void {
        RobustReductionCheck check = check_robust_reduction(
            h, k, static_cast<std::size_t>(tau), z);
        if (check.skipped) {
          ++report.skipped;
        } else {
          ++report.run;
          if (!check.holds) {
            ++report.violations;
            if (report.first_witness.empty()) {
              std::ostringstream w;
              w << "k=" << k << " tau=" << tau << " z=[";
              for (ElementId v : z) w << v << " ";
              w << "] robust=" << check.robust_side << " reduced=" << check.reduced_side
                << " " << graph_str(g);
              report.first_witness = w.str();
            }
          }
        }
        if (static_cast<int>(z.size()) == tau) return;
        for (ElementId v = from; v < n; ++v) {
          z.push_back(v);
          self(self, v + 1);
          z.pop_back();
        }
      };
      sweep(sweep, 0);
    }
  }
  return report;
}

}  // namespace rosenets
