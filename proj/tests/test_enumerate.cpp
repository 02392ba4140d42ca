#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "wecc/enumerate.hpp"
#include "wecc/graph6.hpp"
#include "wecc/population.hpp"

using namespace wecc;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("free tree counts agree with Prufer classification, n <= 9") {
  for (std::size_t n = 1; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(free_trees(n).size() == oracle::free_tree_count_by_prufer(n));
  }
  CHECK(free_trees(10).size() == 106);
  CHECK(free_trees(12).size() == 551);
}

TEST_CASE("generated trees are pairwise non-isomorphic trees") {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::set<std::string> certs;
    for (const Graph& t : free_trees(n)) {
      REQUIRE(t.order() == n);
      REQUIRE(t.size() == n - 1);
      REQUIRE(is_tree(t));
      certs.insert(oracle::tree_certificate(t));
    }
    CHECK(certs.size() == free_trees(n).size());
  }
}

TEST_CASE("level sequences are valid and generation is deterministic") {
  FreeTreeGenerator a(11);
  FreeTreeGenerator b(11);
  std::size_t count = 0;
  while (auto seq = a.next()) {
    auto other = b.next();
    REQUIRE(other.has_value());
    CHECK(*seq == *other);
    REQUIRE(seq->levels.size() == 11);
    CHECK(seq->levels[0] == 0);
    for (std::size_t i = 1; i < seq->levels.size(); ++i) {
      CHECK(seq->levels[i] >= 1);
      CHECK(seq->levels[i] <= seq->levels[i - 1] + 1);
    }
    ++count;
  }
  CHECK_FALSE(b.next().has_value());
  CHECK(count == 235);
}

TEST_CASE("tree generator bounds") {
  CHECK_THROWS_AS(FreeTreeGenerator(0), GraphError);
  CHECK_THROWS_AS(FreeTreeGenerator(kMaxTreeOrder + 1), GraphError);
  CHECK(free_trees(1).front().order() == 1);
  CHECK(free_trees(2).front().size() == 1);
}

TEST_CASE("connected graph counts agree with brute-force classification, n <= 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(connected_graphs(n).size() == oracle::connected_class_count(n));
  }
  CHECK(connected_graphs(7).size() == 853);
}

TEST_CASE("generated connected graphs are connected and pairwise non-isomorphic") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<std::uint64_t> codes;
    const auto graphs = connected_graphs(n);
    for (const Graph& g : graphs) {
      REQUIRE(g.order() == n);
      REQUIRE(oracle::connected(n, g.edges()));
      if (n <= 6) codes.insert(oracle::canonical_code(g));
    }
    if (n <= 6) CHECK(codes.size() == graphs.size());
  }
}

TEST_CASE("graph_from_code uses graph6 bit order") {
  // Three vertices, pairs (0,1),(0,2),(1,2); first pair is the high bit.
  CHECK(graph_from_code(3, 0b100) == graph_from_edges(3, {{0, 1}}));
  CHECK(graph_from_code(3, 0b001) == graph_from_edges(3, {{1, 2}}));
  CHECK(g6_encode(graph_from_code(3, 0b111)) == "Bw");
  CHECK(labeled_graph_count(4) == 64);
  CHECK(pair_index(0, 1) == 0);
  CHECK(pair_index(1, 2) == 2);
}

TEST_CASE("split code ranges reproduce the full enumeration") {
  const std::size_t n = 6;
  const std::uint64_t total = labeled_graph_count(n);
  std::vector<Graph> pieces;
  for (std::uint64_t lo = 0; lo < total; lo += 1000) {
    ConnectedGraphEnumerator e(n, lo, std::min(total, lo + 1000));
    while (auto g = e.next()) pieces.push_back(std::move(*g));
  }
  CHECK(pieces == connected_graphs(n));
  CHECK_THROWS_AS(ConnectedGraphEnumerator(kMaxGraphOrder + 1), GraphError);
}

TEST_CASE("populations replay the generators in order") {
  std::vector<Graph> seen;
  connected_graph_population(1, 7).for_each([&](const Graph& g) { seen.push_back(g); });
  std::vector<Graph> expected;
  for (std::size_t n = 1; n <= 7; ++n) {
    auto part = connected_graphs(n);
    expected.insert(expected.end(), part.begin(), part.end());
  }
  CHECK(seen == expected);

  std::size_t trees = 0;
  tree_population(1, 10).for_each([&](const Graph&) { ++trees; });
  CHECK(trees == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106);

  std::vector<std::size_t> cycle_orders;
  cycle_population(3, 6).for_each([&](const Graph& g) { cycle_orders.push_back(g.order()); });
  CHECK(cycle_orders == std::vector<std::size_t>{3, 4, 5, 6});
}

TEST_CASE("run_ordered consumes in index order") {
  for (unsigned jobs : {1u, 2u, 5u}) {
    std::vector<std::size_t> order;
    std::vector<int> produced(50, 0);
    run_ordered(
        50, jobs, [&](std::size_t i) { produced[i] = static_cast<int>(i * i); },
        [&](std::size_t i) {
          CHECK(produced[i] == static_cast<int>(i * i));
          order.push_back(i);
        });
    std::vector<std::size_t> expected(50);
    for (std::size_t i = 0; i < 50; ++i) expected[i] = i;
    CHECK(order == expected);
  }
}

TEST_CASE("graph6 stream reading") {
  {
    std::istringstream in("Bw\n\nCh\r\n");
    G6StreamReader r(in, true);
    auto a = r.next();
    REQUIRE(a.has_value());
    CHECK(*a == graph_from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
    auto b = r.next();
    REQUIRE(b.has_value());
    CHECK(b->order() == 4);
    CHECK(r.line_number() == 3);
    CHECK_FALSE(r.next().has_value());
  }
  {
    std::istringstream in("B\x7f\nBw\n");
    G6StreamReader r(in, false);
    auto g = r.next();
    REQUIRE(g.has_value());
    CHECK(g->size() == 3);
    REQUIRE(r.issues().size() == 1);
    CHECK(r.issues()[0].line == 1);
  }
  {
    std::istringstream in("Bw\nBx\n");
    G6StreamReader r(in, true);
    CHECK(r.next().has_value());
    try {
      r.next();
      FAIL("expected Graph6Error");
    } catch (const Graph6Error& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
}

TEST_CASE("read_g6_stream on files") {
  const auto good = temp_file("wecc_test_good.g6", "Bw\n");
  const G6File f = read_g6_stream(good.string(), true);
  REQUIRE(f.graphs.size() == 1);
  CHECK(f.graphs[0].size() == 3);
  CHECK(f.issues.empty());

  const auto empty = temp_file("wecc_test_empty.g6", "");
  CHECK(read_g6_stream(empty.string(), true).graphs.empty());

  const auto bad = temp_file("wecc_test_bad.g6", "B\x7f\n");
  CHECK_THROWS_AS(read_g6_stream(bad.string(), true), Graph6Error);
  const G6File lenient = read_g6_stream(bad.string(), false);
  CHECK(lenient.graphs.empty());
  REQUIRE(lenient.issues.size() == 1);
  CHECK(lenient.issues[0].line == 1);

  CHECK_THROWS_AS(read_g6_stream("/nonexistent/wecc.g6", false), std::runtime_error);

  const Population pop = file_population(good.string(), true);
  std::size_t count = 0;
  pop.for_each([&](const Graph&) { ++count; });
  CHECK(count == 1);

  std::filesystem::remove(good);
  std::filesystem::remove(empty);
  std::filesystem::remove(bad);
}
