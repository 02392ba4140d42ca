#ifndef WECC_INVARIANTS_HPP
#define WECC_INVARIANTS_HPP

#include <cstdint>
#include <vector>

#include "wecc/graph.hpp"

namespace wecc {

struct VertexProfile {
  Vertex vertex = 0;
  std::int64_t degree = 0;
  std::int64_t transmission = 0;  // sum of distances to every vertex
  std::int64_t eccentricity = 0;

  friend bool operator==(const VertexProfile&, const VertexProfile&) = default;
};

/// Distance-based invariants of one connected graph. All values are exact.
struct InvariantSummary {
  std::int64_t order = 0;
  std::int64_t size = 0;
  std::int64_t wiener = 0;            // W(G)
  std::int64_t total_ecc = 0;         // sum of vertex eccentricities
  std::int64_t ecc_connectivity = 0;  // sum of deg(v) * ecc(v)
  std::int64_t radius = 0;
  std::int64_t diameter = 0;
  std::vector<Vertex> center;  // sorted
  std::vector<VertexProfile> profiles;

  std::int64_t wiener_minus_ecc() const { return wiener - total_ecc; }

  friend bool operator==(const InvariantSummary&, const InvariantSummary&) = default;
};

/// Throws GraphError if g is disconnected or dm does not match g's order.
InvariantSummary summarize(const Graph& g, const DistanceMatrix& dm);

/// Convenience overload that runs the BFS itself.
InvariantSummary summarize(const Graph& g);

/// W(G) as the sum over unordered pairs u < v; independent of the
/// transmission route used by summarize.
std::int64_t wiener_from_pairs(const DistanceMatrix& dm);

bool is_self_centered(const InvariantSummary& s);

/// True iff stripping all leaves leaves a path (or nothing).
/// Throws GraphError if g is not a tree.
bool is_caterpillar(const Graph& g);

/// Center of a tree by repeated leaf stripping: one vertex or two adjacent
/// ones, sorted. Throws GraphError if g is not a tree.
std::vector<Vertex> tree_center(const Graph& g);

}  // namespace wecc

#endif  // WECC_INVARIANTS_HPP
