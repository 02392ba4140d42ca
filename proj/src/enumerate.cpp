#include "wecc/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <fstream>

#include "wecc/graph6.hpp"

namespace wecc {

Graph TreeLevelSequence::to_graph() const {
  const std::size_t n = levels.size();
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  std::vector<Vertex> last_at_level(n + 1, 0);
  for (Vertex i = 0; i < n; ++i) {
    const int level = levels[i];
    if (level > 0) edges.push_back({last_at_level[level - 1], i});
    last_at_level[level] = i;
  }
  return Graph(n, edges);
}

namespace {

// Splits a center-rooted layout into the first subtree of the root (levels
// shifted up by one) and the rest of the tree.
struct Split {
  std::vector<int> left;
  std::vector<int> rest;
};

Split split_tree(const std::vector<int>& layout) {
  std::size_t m = layout.size();
  bool seen_one = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] != 1) continue;
    if (seen_one) {
      m = i;
      break;
    }
    seen_one = true;
  }
  Split s;
  for (std::size_t i = 1; i < m; ++i) s.left.push_back(layout[i] - 1);
  s.rest.push_back(0);
  for (std::size_t i = m; i < layout.size(); ++i) s.rest.push_back(layout[i]);
  return s;
}

int height(const std::vector<int>& levels) { return *std::max_element(levels.begin(), levels.end()); }

// Beyer-Hedetniemi successor starting at position p. Returns false when the
// layout is the last rooted tree.
bool next_rooted_tree(std::vector<int>& layout, std::size_t p) {
  if (p == 0) return false;
  std::size_t q = p - 1;
  while (layout[q] != layout[p] - 1) --q;
  for (std::size_t i = p; i < layout.size(); ++i) layout[i] = layout[i - p + q];
  return true;
}

bool next_rooted_tree(std::vector<int>& layout) {
  std::size_t p = layout.size() - 1;
  while (p > 0 && layout[p] == 1) --p;
  return next_rooted_tree(layout, p);
}

// Advances layout to the next candidate that is a canonical center-rooted
// free tree: the first root subtree is no taller than the rest, and on equal
// heights is not larger (by size, then lexicographically).
bool advance_to_free_tree(std::vector<int>& layout) {
  for (;;) {
    const Split s = split_tree(layout);
    const int left_height = height(s.left);
    const int rest_height = height(s.rest);
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
      if (s.left.size() > s.rest.size()) {
        valid = false;
      } else if (s.left.size() == s.rest.size() && s.left > s.rest) {
        valid = false;
      }
    }
    if (valid) return true;

    const std::size_t p = s.left.size();
    const bool deep = layout[p] > 2;
    if (!next_rooted_tree(layout, p)) return false;
    if (deep) {
      const int new_left_height = height(split_tree(layout).left);
      const std::size_t len = static_cast<std::size_t>(new_left_height) + 1;
      for (std::size_t k = 0; k < len; ++k) layout[layout.size() - len + k] = static_cast<int>(k) + 1;
    }
  }
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(std::size_t n) : n_(n) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw GraphError("free_trees: order must be in 1.." + std::to_string(kMaxTreeOrder));
  }
  // The path rooted at its center.
  for (std::size_t i = 0; i <= n / 2; ++i) layout_.push_back(static_cast<int>(i));
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) layout_.push_back(static_cast<int>(i));
}

std::optional<TreeLevelSequence> FreeTreeGenerator::next() {
  if (exhausted_) return std::nullopt;
  if (n_ <= 2) {
    exhausted_ = true;
    return TreeLevelSequence{layout_};
  }
  if (!advance_to_free_tree(layout_)) {
    exhausted_ = true;
    return std::nullopt;
  }
  TreeLevelSequence out{layout_};
  if (!next_rooted_tree(layout_)) exhausted_ = true;
  return out;
}

std::vector<Graph> free_trees(std::size_t n) {
  std::vector<Graph> out;
  FreeTreeGenerator gen(n);
  while (auto seq = gen.next()) out.push_back(seq->to_graph());
  return out;
}

std::uint64_t labeled_graph_count(std::size_t n) {
  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  return std::uint64_t{1} << pairs;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if ((code >> (pairs - 1 - pair_index(i, j))) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(std::size_t n, std::uint64_t begin,
                                                   std::uint64_t end)
    : n_(n), pairs_(n * (n > 0 ? n - 1 : 0) / 2), cursor_(begin), end_(end) {
  if (n < 1 || n > kMaxGraphOrder) {
    throw GraphError("connected_graphs: order must be in 1.." + std::to_string(kMaxGraphOrder));
  }
  end_ = std::min(end_, labeled_graph_count(n));
  vertex_bits_.assign(n, 0);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << (pairs_ - 1 - pair_index(i, j));
      vertex_bits_[i] |= bit;
      vertex_bits_[j] |= bit;
    }
  }
}

std::optional<Graph> ConnectedGraphEnumerator::next() {
  while (cursor_ < end_) {
    const std::uint64_t code = cursor_++;
    if (accept(code)) return graph_from_code(n_, code);
  }
  return std::nullopt;
}

bool ConnectedGraphEnumerator::accept(std::uint64_t code) const {
  const std::size_t n = n_;
  int degree[kMaxGraphOrder] = {};
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = std::popcount(code & vertex_bits_[v]);
    if (v > 0 && degree[v] > degree[v - 1]) return false;
  }
  if (n > 1 && degree[n - 1] == 0) return false;

  // Connectivity by bitset flood fill.
  unsigned adjacency[kMaxGraphOrder] = {};
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if ((code >> (pairs_ - 1 - pair_index(i, j))) & 1) {
        adjacency[i] |= 1u << j;
        adjacency[j] |= 1u << i;
      }
    }
  }
  unsigned reached = 1;
  unsigned frontier = 1;
  while (frontier != 0) {
    unsigned next = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if ((frontier >> v) & 1) next |= adjacency[v];
    }
    frontier = next & ~reached;
    reached |= next;
  }
  if (reached != (1u << n) - 1) return false;

  // Relabelings that keep the degree sequence sorted permute within runs of
  // equal degree. Walk them all as an odometer over the runs.
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t start = 0; start < n;) {
    std::size_t stop = start + 1;
    while (stop < n && degree[stop] == degree[start]) ++stop;
    if (stop - start > 1) runs.emplace_back(start, stop);
    start = stop;
  }
  if (runs.empty()) return true;

  std::vector<std::size_t> perm(n);
  for (std::size_t v = 0; v < n; ++v) perm[v] = v;
  for (;;) {
    std::size_t r = runs.size();
    bool advanced = false;
    while (r > 0) {
      --r;
      auto first = perm.begin() + static_cast<std::ptrdiff_t>(runs[r].first);
      auto last = perm.begin() + static_cast<std::ptrdiff_t>(runs[r].second);
      if (std::next_permutation(first, last)) {
        advanced = true;
        break;
      }
    }
    if (!advanced) return true;

    std::uint64_t image = 0;
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if ((adjacency[perm[i]] >> perm[j]) & 1) {
          image |= std::uint64_t{1} << (pairs_ - 1 - pair_index(i, j));
        }
      }
    }
    if (image < code) return false;
  }
}

std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  ConnectedGraphEnumerator gen(n);
  while (auto g = gen.next()) out.push_back(std::move(*g));
  return out;
}

std::optional<Graph> G6StreamReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      return g6_decode(line);
    } catch (const std::exception& e) {
      const std::string message = "line " + std::to_string(line_) + ": " + e.what();
      if (strict_) throw Graph6Error(message);
      issues_.push_back({line_, e.what()});
    }
  }
  if (in_.bad()) throw std::runtime_error("read error after line " + std::to_string(line_));
  return std::nullopt;
}

G6File read_g6_stream(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  G6StreamReader reader(in, strict);
  G6File out;
  while (auto g = reader.next()) out.graphs.push_back(std::move(*g));
  out.issues = reader.issues();
  return out;
}

}  // namespace wecc
