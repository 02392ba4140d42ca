#include <doctest.h>

#include "oracles.hpp"
#include "wecc/enumerate.hpp"
#include "wecc/families.hpp"
#include "wecc/invariants.hpp"
#include "wecc/transforms.hpp"

using namespace wecc;

TEST_CASE("line_graph") {
  for (std::size_t n = 2; n <= 9; ++n) CHECK(line_graph(path_graph(n)) == path_graph(n - 1));
  CHECK(line_graph(star_graph(4)) == complete_graph(3));
  CHECK(oracle::isomorphic(line_graph(cycle_graph(5)), cycle_graph(5)));
  CHECK(line_graph(path_graph(1)).order() == 0);
  // Paw edges in order: (0,1),(0,2),(0,3),(1,2). Only (0,3) and (1,2) are disjoint.
  CHECK(line_graph(paw_graph()).edges() ==
        std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

TEST_CASE("contract_edge") {
  CHECK(contract_edge(path_graph(4), {1, 2}) == path_graph(3));
  CHECK(contract_edge(complete_graph(3), {0, 2}) == complete_graph(2));
  CHECK(contract_edge(paw_graph(), {0, 3}) == complete_graph(3));
  // Merged vertex keeps the smaller index; vertex 4 moves into slot 3.
  CHECK(contract_edge(path_graph(5), {2, 3}) == path_graph(4));
  CHECK(contract_edge(path_graph(5), {2, 1}) == graph_from_edges(4, {{0, 1}, {1, 3}, {2, 3}}));
  CHECK(contract_edge(star_graph(5), {0, 2}) == star_graph(4));
  CHECK_THROWS_AS(contract_edge(path_graph(4), {0, 2}), GraphError);
}

TEST_CASE("order bookkeeping") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      CHECK(line_graph(g).order() == g.size());
      for (const Edge& e : g.edges()) CHECK(contract_edge(g, e).order() == n - 1);
    }
  }
}

TEST_CASE("apply_leaf_move on a double star, s = 2") {
  // Donor 1 carries leaves 2 and 3; receiver 0 carries leaves 4 and 5.
  const Graph t = graph_from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {0, 4}, {0, 5}});
  const LeafMove mv{1, 0, {2, 3}};
  const Graph moved = apply_leaf_move(t, mv);
  CHECK(moved == star_graph(6));
  const std::int64_t n = 6;
  const std::int64_t s = 2;
  CHECK(summarize(t).wiener == 29);
  CHECK(summarize(moved).wiener == 25);
  CHECK(summarize(t).wiener - summarize(moved).wiener == s * n - s * s - 2 * s);
}

TEST_CASE("apply_leaf_move on P_5's pre-leaf vertex, s = 1") {
  const Graph p5 = path_graph(5);
  const Graph moved = apply_leaf_move(p5, {3, 2, {4}});
  CHECK(summarize(p5).wiener == 20);
  CHECK(summarize(moved).wiener == 18);
  CHECK(20 - 18 == 5 - 3);
}

TEST_CASE("apply_leaf_move rejects invalid moves") {
  const Graph p5 = path_graph(5);
  CHECK_THROWS_AS(apply_leaf_move(p5, {3, 1, {4}}), GraphError);     // not adjacent
  CHECK_THROWS_AS(apply_leaf_move(p5, {2, 1, {3}}), GraphError);     // 3 is not a leaf
  CHECK_THROWS_AS(apply_leaf_move(p5, {4, 3, {}}), GraphError);      // nothing to move
  CHECK_THROWS_AS(apply_leaf_move(star_graph(5), {0, 1, {2, 3}}), GraphError);  // misses 4
  CHECK_THROWS_AS(apply_leaf_move(cycle_graph(5), {0, 1, {4}}), GraphError);
}

TEST_CASE("find_paper_leaf_move") {
  CHECK_FALSE(find_paper_leaf_move(path_graph(8)).has_value());
  CHECK_FALSE(find_paper_leaf_move(star_graph(8)).has_value());
  CHECK_FALSE(find_paper_leaf_move(t7_graph()).has_value());
  CHECK_THROWS_AS(find_paper_leaf_move(cycle_graph(5)), GraphError);

  // Spider (2,2,2): hub 0, legs 0-1-2, 0-3-4, 0-5-6. The least diametral
  // path is 2-1-0-3-4, so the off-path branch vertex is 5 with leaf 6.
  const Graph spider = spider_graph(std::vector<std::int64_t>{2, 2, 2});
  CHECK(least_diametral_path(spider) == std::vector<Vertex>{2, 1, 0, 3, 4});
  const auto mv = find_paper_leaf_move(spider);
  REQUIRE(mv.has_value());
  CHECK(*mv == LeafMove{5, 0, {6}});
  CHECK(mv->count() == 1);
}

TEST_CASE("Buckley identity on all trees n <= 14") {
  for (std::int64_t n = 2; n <= 14; ++n) {
    for (const Graph& t : free_trees(static_cast<std::size_t>(n))) {
      REQUIRE(summarize(t).wiener == summarize(line_graph(t)).wiener + n * (n - 1) / 2);
    }
  }
}

TEST_CASE("leaf-move deltas on every non-caterpillar tree n <= 12") {
  std::size_t moves = 0;
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (const Graph& t : free_trees(static_cast<std::size_t>(n))) {
      const auto mv = find_paper_leaf_move(t);
      REQUIRE(mv.has_value() == !is_caterpillar(t));
      if (!mv) continue;
      ++moves;
      const Graph moved = apply_leaf_move(t, *mv);
      REQUIRE(is_tree(moved));
      const auto before = summarize(t);
      const auto after = summarize(moved);
      const auto s = static_cast<std::int64_t>(mv->count());
      REQUIRE(before.wiener - after.wiener == s * n - s * s - 2 * s);
      REQUIRE(before.total_ecc - after.total_ecc == s);
      REQUIRE(n >= s + 4);
      REQUIRE(s * n - s * s - 2 * s > s);
    }
  }
  CHECK(moves > 0);
}

TEST_CASE("bridge contraction identity on all connected graphs n <= 7") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const auto w = summarize(g).wiener;
      for (const Edge& e : bridges(g)) {
        const BridgeSplit split = split_at_bridge(g, e);
        REQUIRE(split.order_u + split.order_v == static_cast<std::int64_t>(n));
        REQUIRE(w - summarize(contract_edge(g, e)).wiener == split.wiener_drop());
      }
    }
  }
}

TEST_CASE("split_at_bridge on K_{1,3} and P_4") {
  const auto star = split_at_bridge(star_graph(4), {0, 1});
  CHECK(star.order_u == 3);
  CHECK(star.order_v == 1);
  CHECK(star.transmission_u == 2);
  CHECK(star.transmission_v == 0);
  CHECK(star.wiener_drop() == 5);
  CHECK(summarize(star_graph(4)).wiener - summarize(contract_edge(star_graph(4), {0, 1})).wiener == 5);

  const auto mid = split_at_bridge(path_graph(4), {1, 2});
  CHECK(mid.wiener_drop() == 1 + 1 + 4);
  CHECK_THROWS_AS(split_at_bridge(cycle_graph(4), {0, 1}), GraphError);
}
