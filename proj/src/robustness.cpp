#include "rosenets/robustness.hpp"

#include <algorithm>
#include <limits>

namespace rosenets {

std::uint64_t exact_removal_cost(std::size_t sequence_len, std::size_t tau) {
  std::size_t r = std::min(tau, sequence_len);
  r = std::min(r, sequence_len - r);  // C(n, r) == C(n, n - r)
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    // c fits comfortably below the cap before overflow can matter here,
    // but saturate anyway for large sequences.
    if (c > std::numeric_limits<std::uint64_t>::max() / (sequence_len - r + i))
      return std::numeric_limits<std::uint64_t>::max();
    c = c * (sequence_len - r + i) / i;
  }
  return c;
}

std::optional<RemovalOutcome> worst_case_removal(const EdgeSetFunction& h,
                                                 const Sequence& s, std::size_t tau) {
  if (exact_removal_cost(s.size(), tau) > kExactRemovalCap) return std::nullopt;

  RemovalOutcome out;
  out.mode = RemovalMode::kExact;
  std::size_t r = std::min(tau, s.size());
  if (r == s.size()) {
    out.removed.assign(s.begin(), s.end());
    std::sort(out.removed.begin(), out.removed.end());
    out.residual = 0.0;
    return out;
  }

  // Candidates ascending by id; lexicographic combination order plus strict
  // improvement yields the lexicographically smallest minimizing set.
  std::vector<ElementId> ids(s.begin(), s.end());
  std::sort(ids.begin(), ids.end());

  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  std::vector<ElementId> z(r);
  bool first = true;
  while (true) {
    for (std::size_t i = 0; i < r; ++i) z[i] = ids[pick[i]];
    double residual = residual_value(h, s, z);
    if (first || residual < out.residual) {
      out.residual = residual;
      out.removed = z;
      first = false;
    }
    // Next combination.
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (pick[i] != i + ids.size() - r) break;
      if (i == 0) return out;
    }
    if (r == 0) return out;
    ++pick[i];
    for (std::size_t j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

RemovalOutcome prefix_removal(const EdgeSetFunction& h, const Sequence& s,
                              std::size_t tau) {
  RemovalOutcome out;
  out.mode = RemovalMode::kPrefix;
  std::size_t r = std::min(tau, s.size());
  out.removed.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(r));
  std::sort(out.removed.begin(), out.removed.end());
  out.residual = residual_value(h, s, out.removed);
  return out;
}

}  // namespace rosenets
