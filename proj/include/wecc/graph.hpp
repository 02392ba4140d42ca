#ifndef WECC_GRAPH_HPP
#define WECC_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wecc {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;

/// Marks an unreachable pair in a DistanceMatrix.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Same edge with u < v.
  Edge normalized() const { return u < v ? Edge{u, v} : Edge{v, u}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised for structurally invalid graph input or violated preconditions.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed rows with each neighbor list sorted,
/// so two graphs compare equal exactly when their labeled edge sets agree.
class Graph {
 public:
  Graph() = default;

  /// Builds the graph; throws GraphError on out-of-range endpoints,
  /// self-loops and duplicate edges (in either orientation).
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return offsets_.size() - 1; }
  std::size_t size() const { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

Graph graph_from_edges(std::size_t n, std::span<const Edge> edges);
inline Graph graph_from_edges(std::size_t n, std::initializer_list<Edge> edges) {
  return graph_from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Dense n x n hop-count matrix. Unreachable pairs hold kUnreachable.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t order() const { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return d_[std::size_t{u} * n_ + v]; }
  Distance& at(Vertex u, Vertex v) { return d_[std::size_t{u} * n_ + v]; }
  std::span<const Distance> row(Vertex u) const { return {d_.data() + std::size_t{u} * n_, n_}; }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> d_;
};

/// One BFS per source; O(n(n+m)).
DistanceMatrix all_pairs_distances(const Graph& g);

/// Single-source BFS distances.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

/// Connected with n-1 edges. K_1 counts as a tree; the empty graph does not.
bool is_tree(const Graph& g);

Graph complement(const Graph& g);

/// Bridges of a connected graph, normalized and sorted. Throws GraphError
/// if g is disconnected.
std::vector<Edge> bridges(const Graph& g);

/// Number of vertices of degree n-1.
std::size_t universal_vertex_count(const Graph& g);

std::string to_string(const Edge& e);

}  // namespace wecc

#endif  // WECC_GRAPH_HPP
