#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rosenets {

// Dense non-negative index into the element table of a graph.
using ElementId = std::int32_t;
// Index into DirectedGraph::edges(), stable after construction.
using EdgeIndex = std::int32_t;

struct Edge {
  ElementId tail = 0;
  ElementId head = 0;
  double weight = 0.0;  // in [0,1]

  bool is_self_loop() const { return tail == head; }
};

struct DegreeStats {
  int max_in = 0;
  int max_out = 0;
};

/// Weighted directed graph over elements 0..n-1. Self-loops encode
/// individual element utility; at most one edge per ordered (tail, head)
/// pair. Immutable after construction and safe for shared concurrent reads.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Validates endpoints, weight range and duplicate (tail, head) pairs,
  /// then stores edges sorted by (tail, head).
  DirectedGraph(ElementId n_elements, std::vector<Edge> edges,
                std::vector<std::string> labels = {});

  ElementId n_elements() const { return n_; }
  EdgeIndex edge_count() const { return static_cast<EdgeIndex>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }

  /// Edge indices with the given tail, ascending by head.
  std::span<const EdgeIndex> out_edges(ElementId v) const;
  /// Edge indices with the given head, ascending by tail.
  std::span<const EdgeIndex> in_edges(ElementId v) const;

  std::optional<EdgeIndex> find_edge(ElementId tail, ElementId head) const;
  std::optional<EdgeIndex> self_loop(ElementId v) const { return find_edge(v, v); }
  bool has_self_loops() const { return n_self_loops_ > 0; }

  int in_degree(ElementId v, bool include_self_loops) const;
  int out_degree(ElementId v, bool include_self_loops) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(ElementId v) const;

 private:
  void check_element(ElementId v) const;

  ElementId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  int n_self_loops_ = 0;
  // CSR adjacency over edge indices, by tail and by head.
  std::vector<std::int32_t> out_offsets_;
  std::vector<EdgeIndex> out_index_;
  std::vector<std::int32_t> in_offsets_;
  std::vector<EdgeIndex> in_index_;
};

/// Maximum in/out degree over all elements.
DegreeStats degree_stats(const DirectedGraph& g, bool include_self_loops);

/// Ordered, duplicate-free list of element ids.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<ElementId> items);

  void append(ElementId v);  // throws on duplicate
  bool contains(ElementId v) const;

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  ElementId operator[](std::size_t i) const { return items_[i]; }
  const std::vector<ElementId>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<ElementId> items_;
};

/// Set of edges of one host graph, identified by edge index.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(EdgeIndex universe) : mask_(static_cast<std::size_t>(universe), false) {}

  void add(EdgeIndex e);
  bool contains(EdgeIndex e) const {
    return static_cast<std::size_t>(e) < mask_.size() && mask_[static_cast<std::size_t>(e)];
  }
  std::size_t size() const { return members_.size(); }
  EdgeIndex universe() const { return static_cast<EdgeIndex>(mask_.size()); }
  /// Members in insertion order.
  const std::vector<EdgeIndex>& members() const { return members_; }
  /// Members ascending by edge index.
  std::vector<EdgeIndex> sorted_members() const;

 private:
  std::vector<bool> mask_;
  std::vector<EdgeIndex> members_;
};

/// Edges (i,j) whose tail precedes its head in s, plus self-loops of
/// members of s.
EdgeSet induced_edge_set(const DirectedGraph& g, const Sequence& s);

/// Subsequence of s with members of z deleted, relative order preserved.
/// Ids in z that are not in s are ignored.
Sequence remove_elements(const Sequence& s, std::span<const ElementId> z);

}  // namespace rosenets
