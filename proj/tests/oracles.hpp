// Independent reference implementations used only by tests. Nothing here
// calls the library's BFS, canonical form, tree generator or graph6 code.
#ifndef WECC_TESTS_ORACLES_HPP
#define WECC_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wecc/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<std::int64_t>>;
inline constexpr std::int64_t kInf = 1'000'000;

/// Floyd-Warshall on the adjacency relation; kInf for unreachable pairs.
Matrix floyd_warshall(const wecc::Graph& g);

/// Connectivity by union-find over the edge list.
bool connected(std::size_t n, const std::vector<wecc::Edge>& edges);

/// True iff some vertex permutation maps a onto b.
bool isomorphic(const wecc::Graph& a, const wecc::Graph& b);

/// Upper-triangle bits (row-major i<j order), minimized over all n! relabelings.
std::uint64_t canonical_code(const wecc::Graph& g);

/// Number of isomorphism classes of connected graphs on n vertices, by
/// listing every labeled graph and deduplicating canonical_code.
std::size_t connected_class_count(std::size_t n);

/// Tree from a Prufer sequence of length n-2.
wecc::Graph prufer_tree(std::size_t n, const std::vector<std::size_t>& seq);

/// AHU certificate of a tree rooted at its center(s); equal iff isomorphic.
std::string tree_certificate(const wecc::Graph& t);

/// Isomorphism classes among all n^(n-2) labeled trees.
std::size_t free_tree_count_by_prufer(std::size_t n);

/// Every edge whose removal disconnects g, tested one edge at a time.
std::vector<wecc::Edge> bridges_by_removal(const wecc::Graph& g);

/// True iff g equals K_n minus some matching, trying every matching of K_n.
bool kn_minus_some_matching(const wecc::Graph& g);

/// Erdos-Renyi G(n, p) with the given engine.
wecc::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

/// Labeled graph from row-major upper-triangle bits.
wecc::Graph graph_from_bits(std::size_t n, std::uint64_t bits);

}  // namespace oracle

#endif  // WECC_TESTS_ORACLES_HPP
