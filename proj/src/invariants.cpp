#include "wecc/invariants.hpp"

#include <algorithm>

namespace wecc {

InvariantSummary summarize(const Graph& g, const DistanceMatrix& dm) {
  const std::size_t n = g.order();
  if (dm.order() != n) throw GraphError("summarize: distance matrix order mismatch");
  if (!is_connected(g)) throw GraphError("summarize: graph is not connected");

  InvariantSummary s;
  s.order = static_cast<std::int64_t>(n);
  s.size = static_cast<std::int64_t>(g.size());
  s.profiles.reserve(n);
  std::int64_t transmissions = 0;
  s.radius = static_cast<std::int64_t>(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexProfile p;
    p.vertex = v;
    p.degree = static_cast<std::int64_t>(g.degree(v));
    for (Distance d : dm.row(v)) {
      p.transmission += d;
      p.eccentricity = std::max<std::int64_t>(p.eccentricity, d);
    }
    transmissions += p.transmission;
    s.total_ecc += p.eccentricity;
    s.ecc_connectivity += p.degree * p.eccentricity;
    s.radius = std::min(s.radius, p.eccentricity);
    s.diameter = std::max(s.diameter, p.eccentricity);
    s.profiles.push_back(p);
  }
  s.wiener = transmissions / 2;
  for (const auto& p : s.profiles) {
    if (p.eccentricity == s.radius) s.center.push_back(p.vertex);
  }
  return s;
}

InvariantSummary summarize(const Graph& g) { return summarize(g, all_pairs_distances(g)); }

std::int64_t wiener_from_pairs(const DistanceMatrix& dm) {
  std::int64_t w = 0;
  const std::size_t n = dm.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) w += dm(u, v);
  }
  return w;
}

bool is_self_centered(const InvariantSummary& s) { return s.radius == s.diameter; }

namespace {

void require_tree(const Graph& g, const char* what) {
  if (!is_tree(g)) throw GraphError(std::string(what) + ": input is not a tree");
}

}  // namespace

bool is_caterpillar(const Graph& g) {
  require_tree(g, "is_caterpillar");
  const std::size_t n = g.order();
  // Degrees inside the spine (the tree with its leaves removed). The spine
  // is itself a tree, so it is a path iff every spine degree is <= 2.
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) <= 1) continue;
    std::size_t spine_degree = 0;
    for (Vertex w : g.neighbors(v)) {
      if (g.degree(w) > 1) ++spine_degree;
    }
    if (spine_degree > 2) return false;
  }
  return true;
}

std::vector<Vertex> tree_center(const Graph& g) {
  require_tree(g, "tree_center");
  const std::size_t n = g.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : g.neighbors(leaf)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace wecc
