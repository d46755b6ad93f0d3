#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rosenets/graph.hpp"
#include "rosenets/utility.hpp"

namespace rosenets {

enum class RemovalMode { kExact, kPrefix };

struct RemovalOutcome {
  std::vector<ElementId> removed;  // ascending ids
  double residual = 0.0;
  RemovalMode mode = RemovalMode::kExact;
};

/// Number of subsets the exact adversary would enumerate: C(|s|, tau).
std::uint64_t exact_removal_cost(std::size_t sequence_len, std::size_t tau);

/// Subset-enumeration budget for the exact adversary.
inline constexpr std::uint64_t kExactRemovalCap = 10'000'000;

/// Exact worst case: the minimum residual value over all removals of at
/// most tau elements of s. Monotonicity makes removing exactly
/// min(tau, |s|) elements optimal, so only those subsets are enumerated.
/// Ties resolve to the lexicographically smallest id set. Returns nullopt
/// when the enumeration would exceed kExactRemovalCap.
std::optional<RemovalOutcome> worst_case_removal(const EdgeSetFunction& h,
                                                 const Sequence& s, std::size_t tau);

/// Experiment protocol: delete the first min(tau, |s|) elements.
RemovalOutcome prefix_removal(const EdgeSetFunction& h, const Sequence& s,
                              std::size_t tau);

}  // namespace rosenets
