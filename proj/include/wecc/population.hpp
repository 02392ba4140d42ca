#ifndef WECC_POPULATION_HPP
#define WECC_POPULATION_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "wecc/enumerate.hpp"
#include "wecc/graph.hpp"

namespace wecc {

using GraphVisitor = std::function<void(const Graph&)>;
using PopulationChunk = std::function<void(const GraphVisitor&)>;

/// A graph population split into independent chunks. Each chunk replays a
/// fixed, deterministic slice; concatenating the chunks in index order gives
/// the population order.
struct Population {
  std::string descriptor;
  std::vector<PopulationChunk> chunks;
  std::vector<InputIssue> issues;  // malformed lines skipped while loading

  void for_each(const GraphVisitor& visit) const {
    for (const auto& chunk : chunks) chunk(visit);
  }
};

/// Free trees of every order in [min_n, max_n], one chunk per order.
Population tree_population(std::size_t min_n, std::size_t max_n);

/// Connected graphs of every order in [min_n, max_n]; large orders are split
/// into code ranges.
Population connected_graph_population(std::size_t min_n, std::size_t max_n);

/// Cycles C_n for n in [min_n, max_n] (min_n >= 3).
Population cycle_population(std::size_t min_n, std::size_t max_n);

Population explicit_population(std::string descriptor, std::vector<Graph> graphs);

/// Graphs from a graph6 file, in file order.
Population file_population(const std::string& path, bool strict);

/// Chunks of a followed by chunks of b.
Population concat(Population a, Population b);

/// Runs produce(i) for i in [0, count) on up to `jobs` threads and hands
/// each result to consume(i, result) strictly in index order, as soon as all
/// earlier indices have been consumed. consume is never called concurrently.
void run_ordered(std::size_t count, unsigned jobs,
                 const std::function<void(std::size_t)>& produce,
                 const std::function<void(std::size_t)>& consume);

}  // namespace wecc

#endif  // WECC_POPULATION_HPP
