#pragma once

#include <cstdint>
#include <string>

#include "rosenets/random_instances.hpp"

namespace rosenets {

struct CampaignParams {
  int instances = 200;
  std::uint64_t seed = 1;
  int max_n = 6;
  int min_k = 3;
  int max_k = 5;
  int min_tau = 1;
  int max_tau = 2;
  // Test hook: scales the claimed ratio to make the sandwich fail, proving
  // the campaign can detect violations.
  double ratio_corruption = 1.0;
};

struct CampaignReport {
  int run = 0;
  int skipped = 0;
  int violations = 0;
  // Runs whose evaluation counter exceeded the 4 k |E| budget.
  int eval_budget_breaches = 0;
  std::string first_witness;

  bool ok() const { return violations == 0 && eval_budget_breaches == 0; }
};

/// Draws random instances and asserts the approximation-ratio sandwich:
/// worst-case residual of the two-phase greedy >= claimed ratio times the
/// worst-case residual of the exhaustive optimum. Degrees feed the ratio
/// with self-loops excluded.
CampaignReport sandwich_campaign(const CampaignParams& params);

/// 1000-style random draw campaign for the single-addition gain check.
CampaignReport addition_gain_campaign(int draws, std::uint64_t seed, int max_n = 7);

/// All-subsequence greedy value bound over random instances.
CampaignReport greedy_bound_campaign(int instances, std::uint64_t seed, int max_n = 6);

/// Robust-vs-reduced optimum comparison over all |z| <= tau <= max_tau.
CampaignReport robust_reduction_campaign(int instances, std::uint64_t seed,
                                         int max_n = 6, int max_tau = 2);

}  // namespace rosenets
