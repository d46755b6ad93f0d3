#include "rosenets/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rosenets {

namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")";
}

}  // namespace

DirectedGraph::DirectedGraph(ElementId n_elements, std::vector<Edge> edges,
                             std::vector<std::string> labels)
    : n_(n_elements), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ < 0) throw std::invalid_argument("negative element count");
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("label table size does not match element count");

  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_)
      throw std::invalid_argument("edge endpoint out of range: " + edge_str(e));
    if (!(e.weight >= 0.0 && e.weight <= 1.0))
      throw std::invalid_argument("edge weight outside [0,1]: " + edge_str(e));
  }

  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].tail == edges_[i].tail && edges_[i - 1].head == edges_[i].head)
      throw std::invalid_argument("duplicate edge " + edge_str(edges_[i]));
  }

  out_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  in_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[static_cast<std::size_t>(e.tail) + 1];
    ++in_offsets_[static_cast<std::size_t>(e.head) + 1];
    if (e.is_self_loop()) ++n_self_loops_;
  }
  for (ElementId v = 0; v < n_; ++v) {
    out_offsets_[static_cast<std::size_t>(v) + 1] += out_offsets_[static_cast<std::size_t>(v)];
    in_offsets_[static_cast<std::size_t>(v) + 1] += in_offsets_[static_cast<std::size_t>(v)];
  }
  out_index_.resize(edges_.size());
  in_index_.resize(edges_.size());
  std::vector<std::int32_t> out_pos(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::int32_t> in_pos(in_offsets_.begin(), in_offsets_.end() - 1);
  for (EdgeIndex e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    out_index_[static_cast<std::size_t>(out_pos[static_cast<std::size_t>(ed.tail)]++)] = e;
    in_index_[static_cast<std::size_t>(in_pos[static_cast<std::size_t>(ed.head)]++)] = e;
  }
}

void DirectedGraph::check_element(ElementId v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("element id " + std::to_string(v) + " out of range");
}

std::span<const EdgeIndex> DirectedGraph::out_edges(ElementId v) const {
  check_element(v);
  auto begin = static_cast<std::size_t>(out_offsets_[static_cast<std::size_t>(v)]);
  auto end = static_cast<std::size_t>(out_offsets_[static_cast<std::size_t>(v) + 1]);
  return {out_index_.data() + begin, end - begin};
}

std::span<const EdgeIndex> DirectedGraph::in_edges(ElementId v) const {
  check_element(v);
  auto begin = static_cast<std::size_t>(in_offsets_[static_cast<std::size_t>(v)]);
  auto end = static_cast<std::size_t>(in_offsets_[static_cast<std::size_t>(v) + 1]);
  return {in_index_.data() + begin, end - begin};
}

std::optional<EdgeIndex> DirectedGraph::find_edge(ElementId tail, ElementId head) const {
  if (tail < 0 || tail >= n_ || head < 0 || head >= n_) return std::nullopt;
  for (EdgeIndex e : out_edges(tail)) {
    if (edge(e).head == head) return e;
  }
  return std::nullopt;
}

int DirectedGraph::in_degree(ElementId v, bool include_self_loops) const {
  int d = 0;
  for (EdgeIndex e : in_edges(v)) {
    if (include_self_loops || !edge(e).is_self_loop()) ++d;
  }
  return d;
}

int DirectedGraph::out_degree(ElementId v, bool include_self_loops) const {
  int d = 0;
  for (EdgeIndex e : out_edges(v)) {
    if (include_self_loops || !edge(e).is_self_loop()) ++d;
  }
  return d;
}

const std::string& DirectedGraph::label(ElementId v) const {
  check_element(v);
  static const std::string empty;
  if (labels_.empty()) return empty;
  return labels_[static_cast<std::size_t>(v)];
}

DegreeStats degree_stats(const DirectedGraph& g, bool include_self_loops) {
  DegreeStats s;
  for (ElementId v = 0; v < g.n_elements(); ++v) {
    s.max_in = std::max(s.max_in, g.in_degree(v, include_self_loops));
    s.max_out = std::max(s.max_out, g.out_degree(v, include_self_loops));
  }
  return s;
}

Sequence::Sequence(std::vector<ElementId> items) : items_(std::move(items)) {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    for (std::size_t j = i + 1; j < items_.size(); ++j) {
      if (items_[i] == items_[j])
        throw std::invalid_argument("duplicate element " + std::to_string(items_[i]) +
                                    " in sequence");
    }
  }
}

void Sequence::append(ElementId v) {
  if (contains(v))
    throw std::invalid_argument("duplicate element " + std::to_string(v) + " in sequence");
  items_.push_back(v);
}

bool Sequence::contains(ElementId v) const {
  return std::find(items_.begin(), items_.end(), v) != items_.end();
}

void EdgeSet::add(EdgeIndex e) {
  if (e < 0 || static_cast<std::size_t>(e) >= mask_.size())
    throw std::out_of_range("edge index " + std::to_string(e) + " outside universe");
  if (mask_[static_cast<std::size_t>(e)]) return;
  mask_[static_cast<std::size_t>(e)] = true;
  members_.push_back(e);
}

std::vector<EdgeIndex> EdgeSet::sorted_members() const {
  std::vector<EdgeIndex> out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet induced_edge_set(const DirectedGraph& g, const Sequence& s) {
  std::vector<std::int32_t> pos(static_cast<std::size_t>(g.n_elements()), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    ElementId v = s[i];
    if (v < 0 || v >= g.n_elements())
      throw std::out_of_range("element id " + std::to_string(v) + " out of range");
    pos[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(i);
  }
  EdgeSet es(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    std::int32_t pt = pos[static_cast<std::size_t>(ed.tail)];
    std::int32_t ph = pos[static_cast<std::size_t>(ed.head)];
    if (pt < 0 || ph < 0) continue;
    if (ed.is_self_loop() || pt < ph) es.add(e);
  }
  return es;
}

Sequence remove_elements(const Sequence& s, std::span<const ElementId> z) {
  std::vector<ElementId> kept;
  kept.reserve(s.size());
  for (ElementId v : s) {
    if (std::find(z.begin(), z.end(), v) == z.end()) kept.push_back(v);
  }
  return Sequence(std::move(kept));
}

}  // namespace rosenets
