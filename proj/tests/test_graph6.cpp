#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wecc/families.hpp"
#include "wecc/graph6.hpp"

using namespace wecc;

TEST_CASE("hand-encoded graph6 strings") {
  // Bits (0,1)=1 (0,2)=0 (1,2)=1 -> 101000 -> 40 + 63 = 103 = 'g'.
  CHECK(g6_decode("Bg") == path_graph(3));
  CHECK(g6_encode(path_graph(3)) == "Bg");
  // 111000 -> 56 + 63 = 119 = 'w'.
  CHECK(g6_decode("Bw") == complete_graph(3));
  CHECK(g6_encode(graph_from_edges(1, {})) == "@");
  CHECK(g6_decode("@") == graph_from_edges(1, {}));
  CHECK(g6_encode(Graph{}) == "?");
  CHECK(g6_decode("?").order() == 0);
}

TEST_CASE("decode tolerates line endings and the optional marker") {
  CHECK(g6_decode("Bw\n") == complete_graph(3));
  CHECK(g6_decode("Bw\r\n") == complete_graph(3));
  CHECK(g6_decode(">>graph6<<Bw") == complete_graph(3));
}

TEST_CASE("decode errors") {
  CHECK_THROWS_AS(g6_decode(""), Graph6Error);
  CHECK_THROWS_AS(g6_decode("B"), Graph6Error);      // missing payload
  CHECK_THROWS_AS(g6_decode("Bww"), Graph6Error);    // payload too long
  CHECK_THROWS_AS(g6_decode("B g"), Graph6Error);    // byte 32 out of range
  CHECK_THROWS_AS(g6_decode("B\x7f"), Graph6Error);  // byte 127 out of range
  CHECK_THROWS_AS(g6_decode("Bx"), Graph6Error);     // padding bit set
  CHECK_THROWS_AS(g6_decode("~??"), Graph6Error);    // truncated long header
  CHECK_THROWS_AS(g6_decode("~???"), Graph6Error);   // long header for n=0
  CHECK_THROWS_AS(g6_decode("~??~"), Graph6Error);   // n=63 without payload
}

TEST_CASE("long header form") {
  for (std::size_t n : {62u, 63u, 100u, 300u}) {
    const Graph g = cycle_graph(n);
    const std::string text = g6_encode(g);
    CHECK((n <= 62) == (text[0] != '~'));
    CHECK(text.size() == (n <= 62 ? 1 : 4) + (n * (n - 1) / 2 + 5) / 6);
    CHECK(g6_decode(text) == g);
  }
  // N(63) = 126 63 63 126.
  CHECK(g6_encode(graph_from_edges(63, {})).substr(0, 4) == "~??~");
}

TEST_CASE("round trip on 10000 random graphs per order 1..12") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int rep = 0; rep < 10000; ++rep) {
      const Graph g = oracle::random_graph(n, density(rng), rng);
      const std::string text = g6_encode(g);
      for (char c : text) REQUIRE((c >= 63 && c <= 126));
      REQUIRE(g6_decode(text) == g);
    }
  }
}
