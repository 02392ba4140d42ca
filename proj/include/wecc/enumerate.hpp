#ifndef WECC_ENUMERATE_HPP
#define WECC_ENUMERATE_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "wecc/graph.hpp"

namespace wecc {

/// Largest orders the native generators accept.
inline constexpr std::size_t kMaxTreeOrder = 20;
inline constexpr std::size_t kMaxGraphOrder = 7;

/// Depth sequence of a rooted ordered tree in preorder: levels[0] == 0 and
/// levels[i] <= levels[i-1] + 1.
struct TreeLevelSequence {
  std::vector<int> levels;

  /// Vertex i is preorder position i; its parent is the last earlier vertex
  /// one level up.
  Graph to_graph() const;

  friend bool operator==(const TreeLevelSequence&, const TreeLevelSequence&) = default;
};

/// Yields every unlabeled free tree of order n exactly once, as the level
/// sequence of the tree rooted at a center. Successive trees come from the
/// Beyer-Hedetniemi rooted-tree successor, with non-canonical candidates
/// skipped by the Wright-Richmond-Odlyzko-McKay jump.
class FreeTreeGenerator {
 public:
  /// Throws GraphError unless 1 <= n <= kMaxTreeOrder.
  explicit FreeTreeGenerator(std::size_t n);

  std::optional<TreeLevelSequence> next();

 private:
  std::size_t n_;
  std::vector<int> layout_;
  bool exhausted_ = false;
};

/// All free trees of order n in generator order.
std::vector<Graph> free_trees(std::size_t n);

/// Bit position of pair (i, j), i < j, in the graph6 column order.
constexpr std::size_t pair_index(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

/// Number of labeled graphs on n vertices, 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(std::size_t n);

/// Labeled graph whose upper triangle is `code`: the first pair in graph6
/// order is the most significant of the n(n-1)/2 bits.
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// Yields each isomorphism class of connected graphs of order n exactly
/// once, restricted to codes in [begin, end).
///
/// A code is kept iff its degrees are non-increasing in vertex order, it is
/// connected, and no relabeling that permutes vertices of equal degree gives
/// a smaller code. Disjoint code ranges give disjoint outputs, so the range
/// can be split across workers.
class ConnectedGraphEnumerator {
 public:
  /// Throws GraphError unless 1 <= n <= kMaxGraphOrder.
  ConnectedGraphEnumerator(std::size_t n, std::uint64_t begin, std::uint64_t end);
  explicit ConnectedGraphEnumerator(std::size_t n)
      : ConnectedGraphEnumerator(n, 0, labeled_graph_count(n)) {}

  std::optional<Graph> next();

 private:
  bool accept(std::uint64_t code) const;

  std::size_t n_;
  std::size_t pairs_;
  std::uint64_t cursor_;
  std::uint64_t end_;
  std::vector<std::uint64_t> vertex_bits_;  // code bits incident to each vertex
};

std::vector<Graph> connected_graphs(std::size_t n);

/// A graph6 line that failed to decode.
struct InputIssue {
  std::size_t line = 0;
  std::string message;
};

/// Reads graph6 lines in order; blank lines are skipped. In strict mode the
/// first malformed line throws Graph6Error naming its line number, otherwise
/// it is recorded in issues() and reading continues.
class G6StreamReader {
 public:
  G6StreamReader(std::istream& in, bool strict) : in_(in), strict_(strict) {}

  std::optional<Graph> next();
  std::size_t line_number() const { return line_; }
  const std::vector<InputIssue>& issues() const { return issues_; }

 private:
  std::istream& in_;
  bool strict_;
  std::size_t line_ = 0;
  std::vector<InputIssue> issues_;
};

struct G6File {
  std::vector<Graph> graphs;
  std::vector<InputIssue> issues;
};

/// Throws std::runtime_error if the file cannot be opened, and Graph6Error
/// under `strict` as for G6StreamReader.
G6File read_g6_stream(const std::string& path, bool strict);

}  // namespace wecc

#endif  // WECC_ENUMERATE_HPP
