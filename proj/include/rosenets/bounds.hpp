#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rosenets {

/// Closed-form constants entering the robust greedy approximation ratios.
/// d_in / d_out are the maximum in/out degree of the network; the library
/// feeds them from degree_stats with self-loops excluded.
struct BoundConstants {
  int k = 0;
  int tau = 0;
  int d_in = 0;
  int d_out = 0;
  double alpha = 0.0;  // 2 d_in + 1
  double beta = 0.0;   // 1 + d_in + d_out
  double gamma = 0.0;  // e^((k-3)/(k-2))
  // e^((k-2tau-1)/(k-tau-1)); undefined for tau in {k-1, k}.
  std::optional<double> eta;
};

/// Requires k >= 3, 0 <= tau <= k, d_in >= 1, d_out >= 0.
BoundConstants make_bound_constants(int k, int tau, int d_in, int d_out);

struct RatioTerms {
  double term1 = 0.0;
  // Absent when the constants put the second form outside its domain
  // (eta undefined, or a non-positive denominator).
  std::optional<double> term2;
  double ratio = 0.0;  // max of the defined, non-negative terms
};

/// Ratio terms for the single-removal case (tau == 1):
///   term1 = (1 - e^{-(1-1/k)}) / (alpha beta)
///   term2 = (gamma^{1/d_in} - 1) / (beta gamma^{1/d_in} - 1)
RatioTerms single_removal_terms(const BoundConstants& c);
double single_removal_ratio(const BoundConstants& c);

/// Ratio terms for 1 <= tau <= k:
///   term1 = (1 - e^{-(1-1/k)}) / (alpha beta)
///   term2 = tau alpha (eta^{1/d_in} - 1)
///           / (tau alpha beta eta^{1/d_in} - (1 - e^{-(1-1/k)}))
RatioTerms general_removal_terms(const BoundConstants& c);
double general_removal_ratio(const BoundConstants& c);

/// Ratio for the campaign convention: tau == 1 uses the single-removal
/// form, larger tau the general form.
double approximation_ratio(const BoundConstants& c);

/// CSV table of constants and ratio terms over a (k, tau) grid. Cells with
/// out-of-domain parameters carry "error"; an undefined eta or second term
/// prints "na". Floats use six decimals.
std::string bounds_table_csv(const std::vector<int>& k_values,
                             const std::vector<int>& tau_values, int d_in, int d_out);

}  // namespace rosenets
