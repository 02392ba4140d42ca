#include "wecc/families.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace wecc {
namespace {

constexpr std::array kFamilies = {
    std::pair{Family::kPath, std::string_view("path")},
    std::pair{Family::kCycle, std::string_view("cycle")},
    std::pair{Family::kStar, std::string_view("star")},
    std::pair{Family::kComplete, std::string_view("complete")},
    std::pair{Family::kCompleteBipartite, std::string_view("complete_bipartite")},
    std::pair{Family::kKnMinusMatching, std::string_view("kn_minus_matching")},
    std::pair{Family::kCaterpillar, std::string_view("caterpillar")},
    std::pair{Family::kSpider, std::string_view("spider")},
    std::pair{Family::kT7, std::string_view("t7")},
    std::pair{Family::kT8, std::string_view("t8")},
    std::pair{Family::kPaw, std::string_view("paw")},
};

constexpr std::array kFamilyList = {
    Family::kPath,        Family::kCycle,  Family::kStar, Family::kComplete,
    Family::kCompleteBipartite, Family::kKnMinusMatching, Family::kCaterpillar,
    Family::kSpider,      Family::kT7,     Family::kT8,   Family::kPaw,
};

void expect_params(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count) {
    throw GraphError(std::string(family_name(spec.family)) + ": expected " +
                     std::to_string(count) + " parameter(s), got " +
                     std::to_string(spec.params.size()));
  }
}

std::size_t nonneg(std::int64_t x, const char* what) {
  if (x < 0) throw GraphError(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(x);
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kFamilies) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [family, n] : kFamilies) {
    if (n == name) return family;
  }
  return std::nullopt;
}

std::span<const Family> all_families() { return kFamilyList; }

Graph path_graph(std::size_t n) {
  if (n < 1) throw GraphError("path: n must be at least 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, edges);
}

Graph star_graph(std::size_t n) {
  if (n < 1) throw GraphError("star: n must be at least 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw GraphError("complete: n must be at least 1");
  return kn_minus_matching(n, 0);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw GraphError("complete_bipartite: part sizes must be at least 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.push_back({u, static_cast<Vertex>(a + v)});
  }
  return Graph(a + b, edges);
}

Graph kn_minus_matching(std::size_t n, std::size_t t) {
  if (n < 1) throw GraphError("kn_minus_matching: n must be at least 1");
  if (t > n / 2) {
    throw GraphError("kn_minus_matching: matching size " + std::to_string(t) +
                     " exceeds floor(n/2) for n=" + std::to_string(n));
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool removed = (u % 2 == 0) && v == u + 1 && u / 2 < t;
      if (!removed) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph caterpillar_graph(std::span<const std::int64_t> leaf_counts) {
  if (leaf_counts.empty()) throw GraphError("caterpillar: spine length must be at least 1");
  const std::size_t spine = leaf_counts.size();
  std::vector<Edge> edges;
  for (Vertex v = 1; v < spine; ++v) edges.push_back({v - 1, v});
  Vertex next = static_cast<Vertex>(spine);
  for (Vertex s = 0; s < spine; ++s) {
    const std::size_t leaves = nonneg(leaf_counts[s], "caterpillar: leaf count");
    for (std::size_t i = 0; i < leaves; ++i) edges.push_back({s, next++});
  }
  return Graph(next, edges);
}

Graph spider_graph(std::span<const std::int64_t> legs) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::int64_t length : legs) {
    if (length < 1) throw GraphError("spider: leg lengths must be at least 1");
    Vertex previous = 0;
    for (std::int64_t i = 0; i < length; ++i) {
      edges.push_back({previous, next});
      previous = next++;
    }
  }
  return Graph(next, edges);
}

Graph t7_graph() {
  return graph_from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}});
}

Graph t8_graph() {
  return graph_from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 7}});
}

Graph paw_graph() { return graph_from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

Graph build(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::kPath:
      expect_params(spec, 1);
      return path_graph(nonneg(p[0], "n"));
    case Family::kCycle:
      expect_params(spec, 1);
      return cycle_graph(nonneg(p[0], "n"));
    case Family::kStar:
      expect_params(spec, 1);
      return star_graph(nonneg(p[0], "n"));
    case Family::kComplete:
      expect_params(spec, 1);
      return complete_graph(nonneg(p[0], "n"));
    case Family::kCompleteBipartite:
      expect_params(spec, 2);
      return complete_bipartite_graph(nonneg(p[0], "a"), nonneg(p[1], "b"));
    case Family::kKnMinusMatching:
      expect_params(spec, 2);
      return kn_minus_matching(nonneg(p[0], "n"), nonneg(p[1], "t"));
    case Family::kCaterpillar:
      return caterpillar_graph(p);
    case Family::kSpider:
      return spider_graph(p);
    case Family::kT7:
      expect_params(spec, 0);
      return t7_graph();
    case Family::kT8:
      expect_params(spec, 0);
      return t8_graph();
    case Family::kPaw:
      expect_params(spec, 0);
      return paw_graph();
  }
  throw GraphError("unknown family");
}

bool is_path(const Graph& g) {
  if (!is_tree(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

bool is_star(const Graph& g) {
  const std::size_t n = g.order();
  if (!is_tree(g)) return false;
  if (n <= 2) return true;
  return universal_vertex_count(g) == 1;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return n >= 1 && g.size() == n * (n - 1) / 2;
}

bool is_kn_minus_matching(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) + 2 < n) return false;
  }
  return true;
}

}  // namespace wecc
