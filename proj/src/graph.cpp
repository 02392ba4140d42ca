#include "wecc/graph.hpp"

#include <algorithm>
#include <utility>

namespace wecc {

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max() / 2) {
    throw GraphError("graph order too large: " + std::to_string(n));
  }
  std::vector<std::uint32_t> degree(n, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError("edge endpoint out of range: " + to_string(e) +
                       " for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = adjacency_.begin() + offsets_[v];
    auto last = adjacency_.begin() + offsets_[v + 1];
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw GraphError("duplicate edge " + to_string(Edge{static_cast<Vertex>(v), *dup}));
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph graph_from_edges(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  const std::size_t n = g.order();
  std::vector<Distance> dist(n, kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix dm(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::size_t head = 0;
    std::size_t tail = 0;
    dm.at(s, s) = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex x = queue[head++];
      const Distance next = dm(s, x) + 1;
      for (Vertex y : g.neighbors(x)) {
        if (dm(s, y) == kUnreachable) {
          dm.at(s, y) = next;
          queue[tail++] = y;
        }
      }
    }
  }
  return dm;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](Distance d) { return d == kUnreachable; });
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2 - g.size());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

std::vector<Edge> bridges(const Graph& g) {
  if (!is_connected(g)) throw GraphError("bridges: graph is not connected");
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> disc(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<Edge> out;

  // Iterative DFS; each frame remembers its parent and the next neighbor slot.
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::uint32_t timer = 0;
  disc[0] = low[0] = timer++;
  stack.push_back({0, kUnvisited, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nb = g.neighbors(f.v);
    if (f.next < nb.size()) {
      const Vertex w = nb[f.next++];
      if (w == f.parent) continue;
      if (disc[w] == kUnvisited) {
        disc[w] = low[w] = timer++;
        stack.push_back({w, f.v, 0});
      } else {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    const Vertex v = f.v;
    const Vertex parent = f.parent;
    stack.pop_back();
    if (parent != kUnvisited) {
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] > disc[parent]) out.push_back(Edge{parent, v}.normalized());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t universal_vertex_count(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t k = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) + 1 == n) ++k;
  }
  return k;
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace wecc
