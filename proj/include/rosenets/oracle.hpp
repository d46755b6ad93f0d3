#pragma once

#include <cstdint>
#include <stdexcept>

#include "rosenets/graph.hpp"
#include "rosenets/robustness.hpp"
#include "rosenets/utility.hpp"

namespace rosenets {

class OracleInfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleSolution {
  Sequence sequence;
  double robust_value = 0.0;     // worst-case residual of the optimum
  double nonrobust_value = 0.0;  // plain value of the optimum
};

/// Evaluation estimate for the exhaustive search (ordered sequences times
/// removal subsets).
std::uint64_t oracle_cost(int n_elements, std::size_t k, std::size_t tau,
                          bool all_lengths);

/// Enumeration budget for optimal_robust_sequence.
inline constexpr std::uint64_t kOracleCap = 10'000'000;

/// Exhaustive search for the sequence of length <= k maximizing the
/// worst-case residual after tau removals. Monotonicity lets the search
/// enumerate length min(k, n) only; all_lengths forces the full <= k sweep
/// for auditing. excluded ids never enter a sequence. Ties resolve to the
/// lexicographically smallest sequence. Throws OracleInfeasibleError above
/// kOracleCap.
OracleSolution optimal_robust_sequence(const EdgeSetFunction& h, std::size_t k,
                                       std::size_t tau, bool all_lengths = false,
                                       std::span<const ElementId> excluded = {});

}  // namespace rosenets
