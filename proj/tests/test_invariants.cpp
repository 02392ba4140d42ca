#include <doctest.h>

#include <algorithm>

#include "wecc/enumerate.hpp"
#include "wecc/families.hpp"
#include "wecc/invariants.hpp"

using namespace wecc;

TEST_CASE("summarize P_4") {
  const auto s = summarize(path_graph(4));
  CHECK(s.wiener == 10);
  CHECK(s.total_ecc == 10);
  CHECK(s.radius == 2);
  CHECK(s.diameter == 3);
  CHECK(s.center == std::vector<Vertex>{1, 2});
  // Eccentricities 3,2,2,3 with degrees 1,2,2,1.
  CHECK(s.ecc_connectivity == 14);
  CHECK(s.profiles[0] == VertexProfile{0, 1, 6, 3});
  CHECK(s.profiles[1] == VertexProfile{1, 2, 4, 2});
}

TEST_CASE("summarize K_{1,3}") {
  const auto s = summarize(star_graph(4));
  CHECK(s.wiener == 9);
  CHECK(s.total_ecc == 7);
  CHECK(s.wiener_minus_ecc() == 2);
  CHECK(s.ecc_connectivity == 9);
  CHECK(s.radius == 1);
  CHECK(s.diameter == 2);
  CHECK(s.center == std::vector<Vertex>{0});
}

TEST_CASE("summarize K_n") {
  for (std::int64_t n = 2; n <= 9; ++n) {
    const auto s = summarize(complete_graph(static_cast<std::size_t>(n)));
    CHECK(s.wiener == n * (n - 1) / 2);
    CHECK(s.total_ecc == n);
    CHECK(s.radius == 1);
    CHECK(s.diameter == 1);
    CHECK(s.center.size() == static_cast<std::size_t>(n));
  }
  const auto k1 = summarize(complete_graph(1));
  CHECK(k1.wiener == 0);
  CHECK(k1.total_ecc == 0);
}

TEST_CASE("summarize rejects disconnected input") {
  const Graph g = graph_from_edges(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(summarize(g), GraphError);
  CHECK_THROWS_AS(summarize(path_graph(3), all_pairs_distances(path_graph(4))), GraphError);
}

TEST_CASE("is_self_centered") {
  CHECK(is_self_centered(summarize(cycle_graph(7))));
  CHECK_FALSE(is_self_centered(summarize(path_graph(5))));
  CHECK(is_self_centered(summarize(complete_graph(4))));
}

TEST_CASE("is_caterpillar") {
  for (std::size_t n = 1; n <= 10; ++n) CHECK(is_caterpillar(path_graph(n)));
  CHECK(is_caterpillar(star_graph(5)));
  CHECK_FALSE(is_caterpillar(spider_graph(std::vector<std::int64_t>{2, 2, 2})));
  CHECK(is_caterpillar(t7_graph()));
  CHECK_THROWS_AS(is_caterpillar(cycle_graph(4)), GraphError);
}

TEST_CASE("tree_center") {
  CHECK(tree_center(path_graph(5)) == std::vector<Vertex>{2});
  CHECK(tree_center(path_graph(6)) == std::vector<Vertex>{2, 3});
  CHECK(tree_center(star_graph(7)) == std::vector<Vertex>{0});
  CHECK(tree_center(path_graph(1)) == std::vector<Vertex>{0});
  CHECK(tree_center(path_graph(2)) == std::vector<Vertex>{0, 1});
  CHECK_THROWS_AS(tree_center(cycle_graph(5)), GraphError);
}

TEST_CASE("tree_center matches the eccentricity center on all trees n <= 12") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const Graph& t : free_trees(n)) {
      const auto center = tree_center(t);
      REQUIRE(center == summarize(t).center);
      if (center.size() == 2) CHECK(t.has_edge(center[0], center[1]));
    }
  }
}

TEST_CASE("summary invariants on every connected graph n <= 7") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const auto dm = all_pairs_distances(g);
      const auto s = summarize(g, dm);
      const auto nn = static_cast<std::int64_t>(n);

      std::int64_t transmissions = 0;
      for (const auto& p : s.profiles) {
        transmissions += p.transmission;
        if (n >= 2) {
          CHECK(p.eccentricity >= 1);
          CHECK(p.eccentricity <= p.transmission);
          // 1 + 2 + ... + ecc for one vertex per level, 1 for the rest.
          CHECK(p.transmission >=
                p.eccentricity * (p.eccentricity + 1) / 2 + (nn - 1 - p.eccentricity));
        }
      }
      CHECK(2 * s.wiener == transmissions);
      CHECK(s.wiener == wiener_from_pairs(dm));
      CHECK(nn * s.radius <= s.total_ecc);
      CHECK(s.total_ecc <= nn * s.diameter);
      CHECK(s.radius <= s.diameter);
      CHECK(s.diameter <= 2 * s.radius);
      for (const auto& p : s.profiles) {
        const bool central = std::binary_search(s.center.begin(), s.center.end(), p.vertex);
        CHECK(central == (p.eccentricity == s.radius));
      }

      // With k >= 1 universal vertices, ecc(G) = 2n - k.
      const auto k = static_cast<std::int64_t>(universal_vertex_count(g));
      if (k >= 1 && n >= 2) CHECK(s.total_ecc == 2 * nn - k);

      // W <= (n-1)/2 ecc, equality iff complete.
      CHECK(2 * s.wiener <= (nn - 1) * s.total_ecc);
      CHECK((2 * s.wiener == (nn - 1) * s.total_ecc) == is_complete(g));
    }
  }
}
