#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rosenets/graph.hpp"

namespace rosenets {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One observed prediction problem: a fixed history prefix and the held
/// out continuation; the two never intersect.
struct EvalTask {
  Sequence history;
  Sequence truth;
};

// ---------------------------------------------------------------------------
// Purchase logs -> conditional purchase-probability graph.

struct InteractionRecord {
  std::string user;
  std::string item;
  std::int64_t timestamp = 0;
};

struct InteractionLog {
  std::vector<InteractionRecord> records;
};

struct PurchaseGraphOptions {
  int min_item_count = 50;   // distinct buyers required to keep an item
  int min_user_items = 29;   // surviving items required to emit a task
  int history_len = 4;
};

struct IngestResult {
  DirectedGraph graph;
  std::vector<EvalTask> tasks;
};

/// Edge (i, j): fraction of i's buyers that later bought j. Self-loop
/// (i, i): fraction of all users that bought i. A user's repeat purchases
/// collapse to the first; each user counts once per ordered pair.
IngestResult build_purchase_graph(const InteractionLog& log,
                                  const PurchaseGraphOptions& opts = {});

/// TSV lines: user<TAB>item<TAB>timestamp. '#' lines and blanks ignored.
InteractionLog load_interaction_log(std::istream& in);
InteractionLog load_interaction_log_file(const std::string& path);

// ---------------------------------------------------------------------------
// Navigation paths -> move-probability graph.

struct PathLog {
  std::vector<std::vector<std::string>> paths;
};

enum class PathLengthUnit { kPages, kClicks };

struct PathGraphOptions {
  int min_path_len = 29;
  PathLengthUnit length_unit = PathLengthUnit::kPages;
  int history_len = 4;
};

/// Edge (i, j): moves from i to j over all visits of i (termini included
/// as visits). No self-loops are emitted. Tasks come from paths of at
/// least min_path_len, deduplicated to first visits before the
/// history/truth split.
IngestResult build_path_graph(const PathLog& log, const PathGraphOptions& opts = {});

enum class BackClickMode {
  kResolve,  // '<' steps back to the previous page, which is visited again
  kDrop,     // '<' markers are deleted from the path
};

/// One path per line, page names separated by ';'. '#' lines ignored.
PathLog load_path_log(std::istream& in, BackClickMode mode = BackClickMode::kResolve);
PathLog load_path_log_file(const std::string& path,
                           BackClickMode mode = BackClickMode::kResolve);

// ---------------------------------------------------------------------------
// Graph and task files.

/// Text format: optional '#' comment lines, a "n_elements m_edges" header,
/// then "tail head weight" per edge with 0-based ids. Writing is canonical
/// (edges sorted by tail then head, shortest round-trip float form), so
/// load-then-save reproduces a saved file byte for byte.
DirectedGraph load_graph(std::istream& in);
DirectedGraph load_graph_file(const std::string& path);
void save_graph(const DirectedGraph& g, std::ostream& out);
void save_graph_file(const DirectedGraph& g, const std::string& path);

/// One task per line: comma-separated history ids, '|', comma-separated
/// truth ids.
std::vector<EvalTask> load_tasks(std::istream& in);
std::vector<EvalTask> load_tasks_file(const std::string& path);
void save_tasks(const std::vector<EvalTask>& tasks, std::ostream& out);
void save_tasks_file(const std::vector<EvalTask>& tasks, const std::string& path);

}  // namespace rosenets
