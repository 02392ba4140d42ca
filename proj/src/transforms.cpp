#include "wecc/transforms.hpp"

#include <algorithm>

#include "wecc/invariants.hpp"

namespace wecc {

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  // Index of every edge incident to each vertex, in edge order.
  std::vector<std::vector<Vertex>> incident(g.order());
  for (Vertex i = 0; i < m; ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  std::vector<Edge> out;
  for (const auto& list : incident) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) out.push_back({list[a], list[b]});
    }
  }
  // Two distinct edges of a simple graph share at most one endpoint, so
  // no pair is produced twice.
  return Graph(m, out);
}

Graph contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw GraphError("contract_edge: " + to_string(e) + " is not an edge");
  const Edge ne = e.normalized();
  const Vertex keep = ne.u;
  const Vertex gone = ne.v;
  const Vertex last = static_cast<Vertex>(g.order() - 1);
  auto relabel = [&](Vertex x) -> Vertex {
    if (x == gone) return keep;
    if (x == last) return gone;
    return x;
  };
  std::vector<Edge> out;
  for (const Edge& f : g.edges()) {
    const Vertex a = relabel(f.u);
    const Vertex b = relabel(f.v);
    if (a != b) out.push_back(Edge{a, b}.normalized());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Graph(g.order() - 1, out);
}

namespace {

void validate_leaf_move(const Graph& t, const LeafMove& mv) {
  if (!is_tree(t)) throw GraphError("leaf move: input is not a tree");
  const std::size_t n = t.order();
  if (mv.donor >= n || mv.receiver >= n || !t.has_edge(mv.donor, mv.receiver)) {
    throw GraphError("leaf move: donor and receiver must be adjacent");
  }
  if (mv.moved.empty()) throw GraphError("leaf move: nothing to move");
  std::vector<Vertex> expected;
  for (Vertex w : t.neighbors(mv.donor)) {
    if (w != mv.receiver) expected.push_back(w);
  }
  if (expected != mv.moved) {
    throw GraphError("leaf move: moved set must be every donor neighbor except the receiver");
  }
  for (Vertex w : mv.moved) {
    if (t.degree(w) != 1) throw GraphError("leaf move: vertex " + std::to_string(w) + " is not a leaf");
  }
}

}  // namespace

Graph apply_leaf_move(const Graph& t, const LeafMove& mv) {
  validate_leaf_move(t, mv);
  std::vector<Edge> out;
  for (const Edge& f : t.edges()) {
    if (f.u == mv.donor && std::binary_search(mv.moved.begin(), mv.moved.end(), f.v)) {
      out.push_back(Edge{mv.receiver, f.v}.normalized());
    } else if (f.v == mv.donor && std::binary_search(mv.moved.begin(), mv.moved.end(), f.u)) {
      out.push_back(Edge{mv.receiver, f.u}.normalized());
    } else {
      out.push_back(f);
    }
  }
  return Graph(t.order(), out);
}

std::vector<Vertex> least_diametral_path(const Graph& t) {
  if (!is_tree(t)) throw GraphError("least_diametral_path: input is not a tree");
  const std::size_t n = t.order();
  const auto dm = all_pairs_distances(t);
  Distance diam = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Distance d : dm.row(u)) diam = std::max(diam, d);
  }
  std::vector<Vertex> best;
  for (Vertex x = 0; x < n; ++x) {
    if (!best.empty() && x > best.front()) break;
    for (Vertex y = 0; y < n; ++y) {
      if (dm(x, y) != diam) continue;
      std::vector<Vertex> path{x};
      Vertex cur = x;
      while (cur != y) {
        for (Vertex w : t.neighbors(cur)) {
          if (dm(w, y) + 1 == dm(cur, y)) {
            cur = w;
            break;
          }
        }
        path.push_back(cur);
      }
      if (best.empty() || path < best) best = std::move(path);
    }
  }
  return best;
}

std::optional<LeafMove> find_paper_leaf_move(const Graph& t) {
  if (!is_tree(t)) throw GraphError("find_paper_leaf_move: input is not a tree");
  if (is_caterpillar(t)) return std::nullopt;

  const std::size_t n = t.order();
  const auto path = least_diametral_path(t);
  std::vector<bool> on_path(n, false);
  for (Vertex v : path) on_path[v] = true;

  // Multi-source BFS from the path gives d(v, P).
  std::vector<Distance> to_path(n, kUnreachable);
  std::vector<Vertex> queue(path.begin(), path.end());
  for (Vertex v : path) to_path[v] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : t.neighbors(x)) {
      if (to_path[y] == kUnreachable) {
        to_path[y] = to_path[x] + 1;
        queue.push_back(y);
      }
    }
  }

  std::optional<Vertex> donor;
  for (Vertex u = 0; u < n; ++u) {
    if (on_path[u] || t.degree(u) < 2) continue;
    if (!donor || to_path[u] > to_path[*donor]) donor = u;
  }
  if (!donor) throw GraphError("find_paper_leaf_move: no donor in a non-caterpillar tree");

  LeafMove mv;
  mv.donor = *donor;
  for (Vertex w : t.neighbors(mv.donor)) {
    if (to_path[w] + 1 == to_path[mv.donor]) {
      mv.receiver = w;
    } else {
      mv.moved.push_back(w);
    }
  }
  return mv;
}

BridgeSplit split_at_bridge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw GraphError("split_at_bridge: " + to_string(e) + " is not an edge");
  const std::size_t n = g.order();
  auto side = [&](Vertex source, Vertex banned) {
    // BFS in g - e starting from one endpoint.
    std::vector<Distance> dist(n, kUnreachable);
    std::vector<Vertex> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (x == source && y == banned) continue;
        if (dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    std::int64_t total = 0;
    for (Vertex x : queue) total += dist[x];
    return std::pair{static_cast<std::int64_t>(queue.size()), total};
  };
  const auto [order_u, trans_u] = side(e.u, e.v);
  const auto [order_v, trans_v] = side(e.v, e.u);
  if (order_u + order_v != static_cast<std::int64_t>(n)) {
    throw GraphError("split_at_bridge: " + to_string(e) + " is not a bridge");
  }
  return {order_u, order_v, trans_u, trans_v};
}

}  // namespace wecc
