#include "rosenets/datasets.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace rosenets {

namespace {

[[noreturn]] void fail(const std::string& what, std::size_t line) {
  throw ParseError(what + " at line " + std::to_string(line));
}

bool skippable(const std::string& line) {
  return line.empty() || line[0] == '#';
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// Deterministic id assignment: keys sorted ascending.
std::unordered_map<std::string, ElementId> assign_ids(std::set<std::string> keys,
                                                      std::vector<std::string>& labels) {
  std::unordered_map<std::string, ElementId> ids;
  labels.reserve(keys.size());
  for (const std::string& key : keys) {
    ids.emplace(key, static_cast<ElementId>(labels.size()));
    labels.push_back(key);
  }
  return ids;
}

// history/truth split after dropping ids absent from the graph; tasks with
// short histories or empty truths are discarded.
void emit_task(const std::vector<ElementId>& seq, int history_len,
               std::vector<EvalTask>& tasks) {
  if (seq.size() < static_cast<std::size_t>(history_len) + 1) return;
  EvalTask task;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i < static_cast<std::size_t>(history_len)) {
      task.history.append(seq[i]);
    } else {
      task.truth.append(seq[i]);
    }
  }
  tasks.push_back(std::move(task));
}

}  // namespace

IngestResult build_purchase_graph(const InteractionLog& log,
                                  const PurchaseGraphOptions& opts) {
  if (log.records.empty()) throw ParseError("empty interaction log");

  // Per-user purchase order: stable sort by timestamp keeps input order on
  // ties; repeat purchases collapse to the first occurrence.
  std::map<std::string, std::vector<std::pair<std::int64_t, std::string>>> by_user;
  for (const InteractionRecord& r : log.records)
    by_user[r.user].emplace_back(r.timestamp, r.item);

  std::map<std::string, std::vector<std::string>> user_items;
  std::map<std::string, int> buyers;
  for (auto& [user, recs] : by_user) {
    std::stable_sort(recs.begin(), recs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> seq;
    std::unordered_set<std::string> seen;
    for (const auto& [ts, item] : recs) {
      if (seen.insert(item).second) seq.push_back(item);
    }
    for (const std::string& item : seq) ++buyers[item];
    user_items.emplace(user, std::move(seq));
  }
  double total_users = static_cast<double>(by_user.size());

  std::set<std::string> kept;
  for (const auto& [item, count] : buyers) {
    if (count >= opts.min_item_count) kept.insert(item);
  }

  std::vector<std::string> labels;
  auto ids = assign_ids(std::move(kept), labels);

  // Ordered pairs, each user counted once per pair.
  std::map<std::pair<ElementId, ElementId>, int> pair_users;
  std::vector<std::vector<ElementId>> filtered_seqs;
  for (const auto& [user, items] : user_items) {
    std::vector<ElementId> seq;
    for (const std::string& item : items) {
      auto it = ids.find(item);
      if (it != ids.end()) seq.push_back(it->second);
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
      for (std::size_t j = i + 1; j < seq.size(); ++j)
        ++pair_users[{seq[i], seq[j]}];
    }
    filtered_seqs.push_back(std::move(seq));
  }

  std::vector<Edge> edges;
  for (const auto& [label, id] : ids) {
    double w = buyers[label] / total_users;
    edges.push_back({id, id, w});
  }
  for (const auto& [pair, count] : pair_users) {
    double w = static_cast<double>(count) / buyers[labels[static_cast<std::size_t>(pair.first)]];
    edges.push_back({pair.first, pair.second, w});
  }

  IngestResult out;
  ElementId n = static_cast<ElementId>(labels.size());
  out.graph = DirectedGraph(n, std::move(edges), std::move(labels));
  for (const auto& seq : filtered_seqs) {
    if (seq.size() >= static_cast<std::size_t>(opts.min_user_items))
      emit_task(seq, opts.history_len, out.tasks);
  }
  return out;
}

InteractionLog load_interaction_log(std::istream& in) {
  InteractionLog log;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (skippable(line)) continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos)
      fail("expected user<TAB>item<TAB>timestamp", line_no);
    InteractionRecord r;
    r.user = line.substr(0, t1);
    r.item = line.substr(t1 + 1, t2 - t1 - 1);
    std::string ts = line.substr(t2 + 1);
    auto [ptr, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), r.timestamp);
    if (ec != std::errc() || ptr != ts.data() + ts.size())
      fail("bad timestamp '" + ts + "'", line_no);
    if (r.user.empty() || r.item.empty()) fail("empty user or item key", line_no);
    log.records.push_back(std::move(r));
  }
  return log;
}

InteractionLog load_interaction_log_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return load_interaction_log(in);
}

IngestResult build_path_graph(const PathLog& log, const PathGraphOptions& opts) {
  if (log.paths.empty()) throw ParseError("empty path log");

  std::set<std::string> pages;
  for (const auto& path : log.paths) {
    for (const std::string& p : path) pages.insert(p);
  }
  std::vector<std::string> labels;
  auto ids = assign_ids(std::move(pages), labels);

  std::map<ElementId, int> visits;
  std::map<std::pair<ElementId, ElementId>, int> moves;
  for (const auto& path : log.paths) {
    for (std::size_t i = 0; i < path.size(); ++i) {
      ElementId v = ids.at(path[i]);
      ++visits[v];
      if (i + 1 < path.size()) ++moves[{v, ids.at(path[i + 1])}];
    }
  }

  std::vector<Edge> edges;
  for (const auto& [pair, count] : moves) {
    if (pair.first == pair.second) continue;  // no self-loops in this model
    double w = static_cast<double>(count) / visits[pair.first];
    edges.push_back({pair.first, pair.second, w});
  }

  IngestResult out;
  ElementId n = static_cast<ElementId>(labels.size());
  out.graph = DirectedGraph(n, std::move(edges), std::move(labels));
  for (const auto& path : log.paths) {
    std::size_t length =
        opts.length_unit == PathLengthUnit::kPages ? path.size() : path.size() - 1;
    if (length < static_cast<std::size_t>(opts.min_path_len)) continue;
    std::vector<ElementId> seq;
    std::unordered_set<std::string> seen;
    for (const std::string& p : path) {
      if (seen.insert(p).second) seq.push_back(ids.at(p));
    }
    emit_task(seq, opts.history_len, out.tasks);
  }
  return out;
}

PathLog load_path_log(std::istream& in, BackClickMode mode) {
  PathLog log;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (skippable(line)) continue;
    std::vector<std::string> path;
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t semi = line.find(';', start);
      std::string token = line.substr(start, semi == std::string::npos ? semi : semi - start);
      start = semi == std::string::npos ? line.size() + 1 : semi + 1;
      if (token.empty()) fail("empty page name", line_no);
      if (token == "<") {
        if (mode == BackClickMode::kDrop) continue;
        // Step back: the page before the current one is visited again.
        if (path.size() < 2) fail("back-click with no page to return to", line_no);
        path.push_back(path[path.size() - 2]);
      } else {
        path.push_back(token);
      }
    }
    if (path.empty()) fail("empty path", line_no);
    log.paths.push_back(std::move(path));
  }
  return log;
}

PathLog load_path_log_file(const std::string& path, BackClickMode mode) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return load_path_log(in, mode);
}

// ---------------------------------------------------------------------------

namespace {

std::string format_weight(double w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, ptr);
}

double parse_weight(const std::string& token, std::size_t line_no) {
  double w = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), w);
  if (ec != std::errc() || ptr != token.data() + token.size())
    fail("bad weight '" + token + "'", line_no);
  return w;
}

}  // namespace

DirectedGraph load_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (skippable(line)) continue;
    std::istringstream fields(line);
    if (!have_header) {
      if (!(fields >> n >> m) || n < 0 || m < 0) fail("bad header", line_no);
      std::string extra;
      if (fields >> extra) fail("trailing header field", line_no);
      have_header = true;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    long long tail = 0, head = 0;
    std::string weight;
    if (!(fields >> tail >> head >> weight)) fail("bad edge line", line_no);
    std::string extra;
    if (fields >> extra) fail("trailing edge field", line_no);
    double w = parse_weight(weight, line_no);
    edges.push_back({static_cast<ElementId>(tail), static_cast<ElementId>(head), w});
    if (static_cast<long long>(edges.size()) > m) fail("more edges than the header states", line_no);
  }
  if (!have_header) throw ParseError("missing header line");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("header states " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  return DirectedGraph(static_cast<ElementId>(n), std::move(edges));
}

DirectedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return load_graph(in);
}

void save_graph(const DirectedGraph& g, std::ostream& out) {
  out << g.n_elements() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges())
    out << e.tail << ' ' << e.head << ' ' << format_weight(e.weight) << '\n';
}

void save_graph_file(const DirectedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  save_graph(g, out);
}

namespace {

std::vector<ElementId> parse_id_list(const std::string& text, std::size_t line_no) {
  std::vector<ElementId> ids;
  std::size_t start = 0;
  if (text.empty()) return ids;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token = text.substr(start, comma == std::string::npos ? comma : comma - start);
    start = comma == std::string::npos ? text.size() + 1 : comma + 1;
    ElementId v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || v < 0)
      fail("bad element id '" + token + "'", line_no);
    ids.push_back(v);
  }
  return ids;
}

}  // namespace

std::vector<EvalTask> load_tasks(std::istream& in) {
  std::vector<EvalTask> tasks;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (skippable(line)) continue;
    std::size_t bar = line.find('|');
    if (bar == std::string::npos) fail("expected history|truth", line_no);
    EvalTask task;
    task.history = Sequence(parse_id_list(line.substr(0, bar), line_no));
    task.truth = Sequence(parse_id_list(line.substr(bar + 1), line_no));
    for (ElementId v : task.truth) {
      if (task.history.contains(v)) fail("history and truth intersect", line_no);
    }
    tasks.push_back(std::move(task));
  }
  return tasks;
}

std::vector<EvalTask> load_tasks_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return load_tasks(in);
}

void save_tasks(const std::vector<EvalTask>& tasks, std::ostream& out) {
  for (const EvalTask& task : tasks) {
    bool first = true;
    for (ElementId v : task.history) {
      if (!first) out << ',';
      out << v;
      first = false;
    }
    out << '|';
    first = true;
    for (ElementId v : task.truth) {
      if (!first) out << ',';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

void save_tasks_file(const std::vector<EvalTask>& tasks, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  save_tasks(tasks, out);
}

}  // namespace rosenets
