#ifndef WECC_FAMILIES_HPP
#define WECC_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wecc/graph.hpp"

namespace wecc {

enum class Family {
  kPath,
  kCycle,
  kStar,
  kComplete,
  kCompleteBipartite,
  kKnMinusMatching,
  kCaterpillar,
  kSpider,
  kT7,
  kT8,
  kPaw,
};

/// A named family plus its integer parameters:
///   path, cycle, star, complete   [n]
///   complete_bipartite            [a, b]
///   kn_minus_matching             [n, t]
///   caterpillar                   [leaves on spine vertex 0, 1, ...]
///   spider                        [leg lengths]
///   t7, t8, paw                   []
struct FamilySpec {
  Family family = Family::kPath;
  std::vector<std::int64_t> params;
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
std::span<const Family> all_families();

/// Throws GraphError on invalid parameters.
Graph build(const FamilySpec& spec);

// Canonical labelings. Path and cycle run 0,1,...,n-1 in order.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// K_{1,n-1} of order n with center 0.
Graph star_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
/// K_n without the edges (0,1),(2,3),...,(2t-2,2t-1).
Graph kn_minus_matching(std::size_t n, std::size_t t);
/// Spine 0..k-1 as a path, then the leaves of spine vertex 0, of 1, and so on.
Graph caterpillar_graph(std::span<const std::int64_t> leaf_counts);
/// Hub 0, then each leg's vertices listed outward from the hub.
Graph spider_graph(std::span<const std::int64_t> legs);
/// Path 0..5 with vertex 6 attached to vertex 1.
Graph t7_graph();
/// Path 0..6 with vertex 7 attached to vertex 1.
Graph t8_graph();
/// Triangle {0,1,2} with pendant vertex 3 attached to 0.
Graph paw_graph();

// Membership tests; all are labeling independent.
bool is_path(const Graph& g);
bool is_cycle(const Graph& g);
bool is_star(const Graph& g);
bool is_complete(const Graph& g);

/// True iff the complement has maximum degree <= 1, i.e. g is K_n with a
/// (possibly empty) matching removed.
bool is_kn_minus_matching(const Graph& g);

}  // namespace wecc

#endif  // WECC_FAMILIES_HPP
