#include "rosenets/datasets.hpp"

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "rosenets/random_instances.hpp"

using namespace rosenets;

namespace {
constexpr double kTol = 1e-9;

InteractionLog purchase_fixture() {
  // Three users buy x then y; a fourth buys x only.
  InteractionLog log;
  log.records = {
      {"u1", "x", 10}, {"u1", "y", 20}, {"u2", "x", 10}, {"u2", "y", 30},
      {"u3", "x", 5},  {"u3", "y", 6},  {"u4", "x", 7},
  };
  return log;
}

PathLog path_fixture() {
  PathLog log;
  log.paths = {{"a", "b", "c"}, {"a", "b", "d"}};
  return log;
}

}  // namespace

TEST_CASE("purchase graph weights from the four-user fixture") {
  PurchaseGraphOptions opts;
  opts.min_item_count = 1;
  opts.min_user_items = 2;
  IngestResult r = build_purchase_graph(purchase_fixture(), opts);

  REQUIRE(r.graph.n_elements() == 2);  // x = 0, y = 1 (sorted keys)
  CHECK(r.graph.label(0) == "x");
  auto w = [&](ElementId t, ElementId h) {
    auto e = r.graph.find_edge(t, h);
    REQUIRE(e.has_value());
    return r.graph.edge(*e).weight;
  };
  CHECK(std::abs(w(0, 1) - 0.75) < kTol);  // 3 of x's 4 buyers bought y later
  CHECK(std::abs(w(0, 0) - 1.0) < kTol);   // everyone bought x
  CHECK(std::abs(w(1, 1) - 0.75) < kTol);
  CHECK_FALSE(r.graph.find_edge(1, 0).has_value());
}

TEST_CASE("items below the count threshold disappear") {
  InteractionLog log = purchase_fixture();
  log.records.push_back({"u4", "z", 9});
  PurchaseGraphOptions opts;
  opts.min_item_count = 2;
  IngestResult r = build_purchase_graph(log, opts);
  CHECK(r.graph.n_elements() == 2);  // z was bought once
  for (const std::string& label : r.graph.labels()) CHECK(label != "z");
}

TEST_CASE("repeat purchases collapse to the first occurrence") {
  InteractionLog log;
  log.records = {{"u1", "x", 1}, {"u1", "y", 2}, {"u1", "x", 3}, {"u2", "x", 1}};
  PurchaseGraphOptions opts;
  opts.min_item_count = 1;
  IngestResult r = build_purchase_graph(log, opts);
  // No y -> x edge: the second x purchase does not count.
  auto x = 0, y = 1;
  CHECK(r.graph.find_edge(x, y).has_value());
  CHECK_FALSE(r.graph.find_edge(y, x).has_value());
}

TEST_CASE("purchase tasks split history and truth") {
  InteractionLog log;
  for (int i = 0; i < 6; ++i)
    log.records.push_back({"u1", "p" + std::to_string(i), i});
  log.records.push_back({"u2", "p0", 0});  // keeps p0 above threshold boundaries
  PurchaseGraphOptions opts;
  opts.min_item_count = 1;
  opts.min_user_items = 6;
  IngestResult r = build_purchase_graph(log, opts);
  REQUIRE(r.tasks.size() == 1);
  CHECK(r.tasks[0].history.size() == 4);
  CHECK(r.tasks[0].truth.size() == 2);
  for (ElementId v : r.tasks[0].truth) CHECK_FALSE(r.tasks[0].history.contains(v));
}

TEST_CASE("empty logs are ingestion errors") {
  CHECK_THROWS_AS(build_purchase_graph(InteractionLog{}, {}), ParseError);
  CHECK_THROWS_AS(build_path_graph(PathLog{}, {}), ParseError);
}

TEST_CASE("path graph weights from the two-path fixture") {
  PathGraphOptions opts;
  opts.min_path_len = 3;
  IngestResult r = build_path_graph(path_fixture(), opts);

  REQUIRE(r.graph.n_elements() == 4);  // a,b,c,d
  auto w = [&](ElementId t, ElementId h) {
    auto e = r.graph.find_edge(t, h);
    REQUIRE(e.has_value());
    return r.graph.edge(*e).weight;
  };
  CHECK(std::abs(w(0, 1) - 1.0) < kTol);  // both visits of a move to b
  CHECK(std::abs(w(1, 2) - 0.5) < kTol);
  CHECK(std::abs(w(1, 3) - 0.5) < kTol);
  CHECK_FALSE(r.graph.has_self_loops());
}

TEST_CASE("path termini stay vertices with zero out-degree") {
  IngestResult r = build_path_graph(path_fixture(), {});
  ElementId c = 2;
  CHECK(r.graph.out_degree(c, true) == 0);
  CHECK(r.graph.in_degree(c, true) == 1);
}

TEST_CASE("move counts balance visits minus terminal stops") {
  IngestResult r = build_path_graph(path_fixture(), {});
  // a: 2 visits, 2 moves out; b: 2 visits, 2 moves; c,d: terminal.
  double out_a = 0.0;
  for (EdgeIndex e : r.graph.out_edges(0)) out_a += r.graph.edge(e).weight;
  CHECK(std::abs(out_a - 1.0) < kTol);  // moves(a)/visits(a) sums to 1: no terminal visits
}

TEST_CASE("back-click handling") {
  std::istringstream in("a;b;<;c\n");
  PathLog resolved = load_path_log(in, BackClickMode::kResolve);
  REQUIRE(resolved.paths.size() == 1);
  CHECK(resolved.paths[0] == std::vector<std::string>({"a", "b", "a", "c"}));

  std::istringstream in2("a;b;<;c\n");
  PathLog dropped = load_path_log(in2, BackClickMode::kDrop);
  CHECK(dropped.paths[0] == std::vector<std::string>({"a", "b", "c"}));

  std::istringstream bad("<;a\n");
  CHECK_THROWS_AS(load_path_log(bad, BackClickMode::kResolve), ParseError);
}

TEST_CASE("path length units select different task cohorts") {
  PathLog log;
  log.paths = {{"a", "b", "c", "d", "e", "f"}};  // 6 pages, 5 clicks
  PathGraphOptions pages;
  pages.min_path_len = 6;
  CHECK(build_path_graph(log, pages).tasks.size() == 1);
  PathGraphOptions clicks;
  clicks.min_path_len = 6;
  clicks.length_unit = PathLengthUnit::kClicks;
  CHECK(build_path_graph(log, clicks).tasks.size() == 0);
}

TEST_CASE("interaction log parsing reports line numbers") {
  std::istringstream ok("# comment\nu1\tx\t12\n");
  InteractionLog log = load_interaction_log(ok);
  REQUIRE(log.records.size() == 1);
  CHECK(log.records[0].user == "u1");

  std::istringstream missing("u1\tx\n");
  CHECK_THROWS_WITH_AS(load_interaction_log(missing),
                       doctest::Contains("line 1"), ParseError);
  std::istringstream bad_ts("u1\tx\tnoon\n");
  CHECK_THROWS_AS(load_interaction_log(bad_ts), ParseError);
}

TEST_CASE("graph file round-trip") {
  DirectedGraph g = star_triangle_graph();
  std::ostringstream first;
  save_graph(g, first);
  std::istringstream back(first.str());
  DirectedGraph loaded = load_graph(back);
  std::ostringstream second;
  save_graph(loaded, second);
  CHECK(first.str() == second.str());
  CHECK(loaded.n_elements() == g.n_elements());
  CHECK(loaded.edge_count() == g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    CHECK(loaded.edge(e).tail == g.edge(e).tail);
    CHECK(loaded.edge(e).head == g.edge(e).head);
    CHECK(loaded.edge(e).weight == g.edge(e).weight);
  }
}

TEST_CASE("graph file errors") {
  SUBCASE("header and body must agree") {
    std::istringstream fewer("2 2\n0 1 0.5\n");
    CHECK_THROWS_AS(load_graph(fewer), ParseError);
    std::istringstream more("2 0\n0 1 0.5\n");
    CHECK_THROWS_AS(load_graph(more), ParseError);
  }
  SUBCASE("weights outside [0,1] are rejected") {
    std::istringstream bad("2 1\n0 1 1.5\n");
    CHECK_THROWS_AS(load_graph(bad), std::invalid_argument);
  }
  SUBCASE("missing header") {
    std::istringstream empty("");
    CHECK_THROWS_AS(load_graph(empty), ParseError);
  }
  SUBCASE("comments are ignored") {
    std::istringstream in("# a graph\n1 1\n# loop\n0 0 0.25\n");
    DirectedGraph g = load_graph(in);
    CHECK(g.edge_count() == 1);
  }
}

TEST_CASE("task file round-trip") {
  std::vector<EvalTask> tasks;
  tasks.push_back({Sequence({0, 5, 2, 9}), Sequence({4, 1, 7})});
  tasks.push_back({Sequence({3, 8, 10, 11}), Sequence({6})});
  std::ostringstream out;
  save_tasks(tasks, out);
  CHECK(out.str() == "0,5,2,9|4,1,7\n3,8,10,11|6\n");
  std::istringstream in(out.str());
  std::vector<EvalTask> loaded = load_tasks(in);
  REQUIRE(loaded.size() == 2);
  CHECK(loaded[0].history == tasks[0].history);
  CHECK(loaded[1].truth == tasks[1].truth);

  std::istringstream overlap("1,2,3,4|4,5\n");
  CHECK_THROWS_AS(load_tasks(overlap), ParseError);
}

TEST_CASE("ingestion is deterministic") {
  PurchaseGraphOptions opts;
  opts.min_item_count = 1;
  opts.min_user_items = 2;
  IngestResult a = build_purchase_graph(purchase_fixture(), opts);
  IngestResult b = build_purchase_graph(purchase_fixture(), opts);
  std::ostringstream fa, fb;
  save_graph(a.graph, fa);
  save_graph(b.graph, fb);
  CHECK(fa.str() == fb.str());
}
