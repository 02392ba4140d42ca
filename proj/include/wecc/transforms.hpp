#ifndef WECC_TRANSFORMS_HPP
#define WECC_TRANSFORMS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wecc/graph.hpp"

namespace wecc {

/// Line graph. Vertex i of the result is the i-th edge of g in
/// lexicographic (u < v) order. L(K_1) is the empty graph.
Graph line_graph(const Graph& g);

/// G.e: merges the endpoints of e into the smaller index, drops the loop and
/// parallel edges, and moves the last vertex into the freed index.
/// Throws GraphError if e is not an edge of g.
Graph contract_edge(const Graph& g, Edge e);

/// Detaches every neighbor of `donor` except `receiver` and reattaches it to
/// `receiver`. The moved vertices must all be leaves.
struct LeafMove {
  Vertex donor = 0;
  Vertex receiver = 0;
  std::vector<Vertex> moved;  // sorted

  std::size_t count() const { return moved.size(); }

  friend bool operator==(const LeafMove&, const LeafMove&) = default;
};

/// Throws GraphError if t is not a tree or mv is not a valid move on t.
Graph apply_leaf_move(const Graph& t, const LeafMove& mv);

/// The move used to push a non-caterpillar tree toward a caterpillar:
/// with P the lexicographically least diametral path, the donor is the
/// off-path vertex of degree >= 2 farthest from P (smallest index on ties)
/// and the receiver is its neighbor toward P. Returns nullopt for
/// caterpillars. Throws GraphError if t is not a tree.
std::optional<LeafMove> find_paper_leaf_move(const Graph& t);

/// Lexicographically least vertex sequence among all paths joining two
/// vertices at distance diam(t). Throws GraphError if t is not a tree.
std::vector<Vertex> least_diametral_path(const Graph& t);

/// Quantities of g - e for a bridge e = uv: orders of the two sides and
/// the transmission of u within its side and of v within its side.
struct BridgeSplit {
  std::int64_t order_u = 0;
  std::int64_t order_v = 0;
  std::int64_t transmission_u = 0;
  std::int64_t transmission_v = 0;

  /// W(G) - W(G.e) predicted from the split.
  std::int64_t wiener_drop() const {
    return transmission_u + transmission_v + order_u * order_v;
  }
};

/// Throws GraphError if e is not a bridge of g.
BridgeSplit split_at_bridge(const Graph& g, Edge e);

}  // namespace wecc

#endif  // WECC_TRANSFORMS_HPP
