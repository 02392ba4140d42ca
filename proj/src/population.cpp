#include "wecc/population.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

namespace wecc {
namespace {

std::string order_range(std::size_t lo, std::size_t hi) {
  return lo == hi ? "n=" + std::to_string(lo) : "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

// Code-range chunk size for graph enumeration.
constexpr std::uint64_t kCodesPerChunk = std::uint64_t{1} << 15;

}  // namespace

Population tree_population(std::size_t min_n, std::size_t max_n) {
  if (min_n < 1 || max_n > kMaxTreeOrder || min_n > max_n) {
    throw GraphError("tree population: orders must lie in 1.." + std::to_string(kMaxTreeOrder));
  }
  Population pop;
  pop.descriptor = "trees(" + order_range(min_n, max_n) + ")";
  for (std::size_t n = min_n; n <= max_n; ++n) {
    pop.chunks.emplace_back([n](const GraphVisitor& visit) {
      FreeTreeGenerator gen(n);
      while (auto seq = gen.next()) visit(seq->to_graph());
    });
  }
  return pop;
}

Population connected_graph_population(std::size_t min_n, std::size_t max_n) {
  if (min_n < 1 || max_n > kMaxGraphOrder || min_n > max_n) {
    throw GraphError("graph population: orders must lie in 1.." + std::to_string(kMaxGraphOrder));
  }
  Population pop;
  pop.descriptor = "connected_graphs(" + order_range(min_n, max_n) + ")";
  for (std::size_t n = min_n; n <= max_n; ++n) {
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t begin = 0; begin < total; begin += kCodesPerChunk) {
      const std::uint64_t end = std::min(total, begin + kCodesPerChunk);
      pop.chunks.emplace_back([n, begin, end](const GraphVisitor& visit) {
        ConnectedGraphEnumerator gen(n, begin, end);
        while (auto g = gen.next()) visit(*g);
      });
    }
  }
  return pop;
}

Population cycle_population(std::size_t min_n, std::size_t max_n) {
  std::vector<Edge> edges;
  std::vector<Graph> graphs;
  for (std::size_t n = std::max<std::size_t>(min_n, 3); n <= max_n; ++n) {
    edges.clear();
    for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
    edges.push_back({0, static_cast<Vertex>(n - 1)});
    graphs.emplace_back(n, edges);
  }
  return explicit_population("cycles(" + order_range(min_n, max_n) + ")", std::move(graphs));
}

Population explicit_population(std::string descriptor, std::vector<Graph> graphs) {
  constexpr std::size_t kGraphsPerChunk = 1024;
  auto shared = std::make_shared<const std::vector<Graph>>(std::move(graphs));
  Population pop;
  pop.descriptor = std::move(descriptor);
  for (std::size_t begin = 0; begin < shared->size(); begin += kGraphsPerChunk) {
    const std::size_t end = std::min(shared->size(), begin + kGraphsPerChunk);
    pop.chunks.emplace_back([shared, begin, end](const GraphVisitor& visit) {
      for (std::size_t i = begin; i < end; ++i) visit((*shared)[i]);
    });
  }
  return pop;
}

Population file_population(const std::string& path, bool strict) {
  G6File file = read_g6_stream(path, strict);
  Population pop = explicit_population("file(" + path + ")", std::move(file.graphs));
  pop.issues = std::move(file.issues);
  return pop;
}

Population concat(Population a, Population b) {
  a.descriptor += "+" + b.descriptor;
  for (auto& chunk : b.chunks) a.chunks.push_back(std::move(chunk));
  for (auto& issue : b.issues) a.issues.push_back(std::move(issue));
  return a;
}

void run_ordered(std::size_t count, unsigned jobs,
                 const std::function<void(std::size_t)>& produce,
                 const std::function<void(std::size_t)>& consume) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      produce(i);
      consume(i);
    }
    return;
  }

  std::atomic<std::size_t> next_task{0};
  std::mutex mutex;
  std::vector<char> done(count, 0);
  std::size_t next_consume = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next_task.fetch_add(1);
      if (i >= count) return;
      try {
        produce(i);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        next_task = count;
        return;
      }
      std::lock_guard lock(mutex);
      done[i] = 1;
      if (failure) return;
      try {
        while (next_consume < count && done[next_consume]) consume(next_consume++);
      } catch (...) {
        failure = std::current_exception();
        next_task = count;
        return;
      }
    }
  };

  {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace wecc
