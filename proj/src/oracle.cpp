#include "rosenets/oracle.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace rosenets {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

// DFS over ordered duplicate-free sequences in lexicographic order.
class SequenceSearch {
 public:
  SequenceSearch(const EdgeSetFunction& h, std::size_t tau,
                 std::span<const ElementId> excluded)
      : h_(h), tau_(tau),
        blocked_(static_cast<std::size_t>(h.graph().n_elements()), false) {
    for (ElementId v : excluded) blocked_[static_cast<std::size_t>(v)] = true;
  }

  void run(std::size_t length) {
    prefix_.clear();
    used_ = blocked_;
    extend(length);
  }

  bool found() const { return found_; }
  const Sequence& best() const { return best_; }
  double best_value() const { return best_value_; }

 private:
  void extend(std::size_t length) {
    if (prefix_.size() == length) {
      Sequence s(prefix_);
      auto outcome = worst_case_removal(h_, s, tau_);
      double value = outcome->residual;  // cap checked by oracle_cost upfront
      if (!found_ || value > best_value_) {
        found_ = true;
        best_value_ = value;
        best_ = std::move(s);
      }
      return;
    }
    for (ElementId v = 0; v < h_.graph().n_elements(); ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      used_[static_cast<std::size_t>(v)] = true;
      prefix_.push_back(v);
      extend(length);
      prefix_.pop_back();
      used_[static_cast<std::size_t>(v)] = false;
    }
  }

  const EdgeSetFunction& h_;
  std::size_t tau_;
  std::vector<bool> blocked_;
  std::vector<ElementId> prefix_;
  std::vector<bool> used_;
  bool found_ = false;
  Sequence best_;
  double best_value_ = 0.0;
};

std::uint64_t falling_factorial(int n, std::size_t j) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < j; ++i)
    p = saturating_mul(p, static_cast<std::uint64_t>(n) - i);
  return p;
}

std::uint64_t choose(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

}  // namespace

std::uint64_t oracle_cost(int n_elements, std::size_t k, std::size_t tau,
                          bool all_lengths) {
  std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(n_elements));
  std::uint64_t total = 0;
  for (std::size_t j = all_lengths ? 0 : top; j <= top; ++j) {
    std::uint64_t per_seq = choose(j, std::min(tau, j));
    std::uint64_t seqs = falling_factorial(n_elements, j);
    std::uint64_t add = saturating_mul(seqs, per_seq);
    if (total > std::numeric_limits<std::uint64_t>::max() - add)
      return std::numeric_limits<std::uint64_t>::max();
    total += add;
  }
  return total;
}

OracleSolution optimal_robust_sequence(const EdgeSetFunction& h, std::size_t k,
                                       std::size_t tau, bool all_lengths,
                                       std::span<const ElementId> excluded) {
  int n = h.graph().n_elements() - static_cast<int>(excluded.size());
  if (oracle_cost(n, k, tau, all_lengths) > kOracleCap)
    throw OracleInfeasibleError("exhaustive search budget exceeded");

  SequenceSearch search(h, tau, excluded);
  std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(n));
  if (all_lengths) {
    for (std::size_t j = 0; j <= top; ++j) search.run(j);
  } else {
    search.run(top);
  }

  OracleSolution out;
  if (search.found()) {
    out.sequence = search.best();
    out.robust_value = search.best_value();
    out.nonrobust_value = sequence_value(h, out.sequence);
  }
  return out;
}

}  // namespace rosenets
