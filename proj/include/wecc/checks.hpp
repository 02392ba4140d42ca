#ifndef WECC_CHECKS_HPP
#define WECC_CHECKS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wecc/graph.hpp"
#include "wecc/invariants.hpp"
#include "wecc/population.hpp"

namespace wecc {

enum class CheckId {
  kT21,      // W >= ecc + m - n; equality iff K_n minus a matching
  kT22,      // W >= ecc for n >= 4; equality iff P_4 or C_4
  kDank,     // 2W <= (n-1) ecc; equality iff complete
  kT23i,     // 2W <= (n-1) ecc - xi + 2m; equality iff diam <= 2
  kT23ii,    // self-centered: 8(W - ecc) <= n(n-2)^2 or n((n-2)^2-1)
  kNG,       // Nordhaus-Gaddum sum bound
  kTStar,    // trees: 4W <= (2n-3) ecc + 1; equality iff star
  kTCat,     // trees: min W - ecc attained on a caterpillar; leaf-move deltas
  kTLine,    // trees: W - ecc via the line graph
  kPEcc,     // trees: ecc from the transmission of the center
  kTRad,     // trees: ecc lower bound from the radius; equality iff path
  kBuck,     // trees: W(T) = W(L(T)) + C(n,2)
  kTBridge,  // contracting a bridge does not increase W - ecc
  kConj1,    // contracting any edge does not increase W - ecc
  kConj2,    // rad >= 4: W - ecc <= floor((2n^3-9n^2+4n+3)/12), equality iff path
};

std::string_view check_name(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view name);
std::span<const CheckId> all_checks();
std::string_view check_statement(CheckId id);

/// Open conjectures never report "verified".
bool is_conjecture(CheckId id);
/// Checks whose statement is about trees only.
bool is_tree_check(CheckId id);

/// floor((2n^3 - 9n^2 + 4n + 3) / 12).
std::int64_t conjecture2_bound(std::int64_t n);

struct Violation {
  std::string graph6;
  std::string detail;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct EqualityMismatch {
  std::string graph6;
  bool expected_member = false;  // graph is in the claimed equality class
  bool actual_equality = false;  // lhs == rhs
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;

  friend bool operator==(const EqualityMismatch&, const EqualityMismatch&) = default;
};

/// Per-order record for the caterpillar-minimum check.
struct OrderMinimum {
  std::optional<std::int64_t> all_trees;
  std::string all_witness;  // least graph6 among all minimizers
  std::optional<std::int64_t> caterpillars;
  bool minimizers_all_caterpillars = true;

  friend bool operator==(const OrderMinimum&, const OrderMinimum&) = default;
};

enum class Status { kVerified, kRefuted, kPartial, kSkipped };
std::string_view status_name(Status s);

struct CheckVerdict {
  CheckId id = CheckId::kT21;
  std::string population;
  bool applicable = true;
  bool completed = false;
  std::uint64_t graphs_tested = 0;
  std::uint64_t skipped = 0;          // precondition not met
  std::uint64_t cases_tested = 0;     // edges, bridges or moves, where relevant
  std::uint64_t equality_cases = 0;
  std::uint64_t boundary_exceedances = 0;  // CONJ2: rad < 4 graphs above the bound
  std::vector<Violation> violations;
  std::vector<EqualityMismatch> equality_mismatches;
  std::vector<Violation> boundary_witnesses;  // CONJ2: rad < 4 graphs at the bound
  std::map<std::int64_t, OrderMinimum> minima;  // TCAT, keyed by order

  Status status() const;
  bool clean() const { return violations.empty() && equality_mismatches.empty(); }

  friend bool operator==(const CheckVerdict&, const CheckVerdict&) = default;
};

/// Per-graph data shared by every check run on that graph. The distance
/// matrix and summary are computed once.
class GraphContext {
 public:
  explicit GraphContext(const Graph& g);

  const Graph& graph() const { return graph_; }
  bool connected() const { return connected_; }
  bool tree() const { return tree_; }
  const DistanceMatrix& distances() const { return distances_; }
  /// Only valid when connected().
  const InvariantSummary& summary() const { return *summary_; }
  const std::string& graph6() const;

 private:
  const Graph& graph_;
  DistanceMatrix distances_;
  bool connected_ = false;
  bool tree_ = false;
  std::optional<InvariantSummary> summary_;
  mutable std::optional<std::string> graph6_;
};

CheckVerdict empty_verdict(CheckId id, std::string population);

/// Folds one graph into the verdict.
void check_graph(const GraphContext& ctx, CheckVerdict& verdict);

/// Commutative merge of two partial verdicts for the same check.
void merge(CheckVerdict& into, CheckVerdict&& from);

/// Derives order-level findings (TCAT minima comparison) and marks the
/// sweep complete.
void finalize(CheckVerdict& verdict);

/// Called for each newly found violation, mismatch or boundary witness, in
/// population order.
using FindingSink = std::function<void(CheckId, std::string_view kind, const Violation&)>;

/// Runs every check over the population in one pass, one GraphContext per
/// graph. The result does not depend on `jobs`.
std::vector<CheckVerdict> run_checks(std::span<const CheckId> ids, const Population& pop,
                                     unsigned jobs = 1, const FindingSink& sink = {});

CheckVerdict run_check(CheckId id, const Population& pop, unsigned jobs = 1);

}  // namespace wecc

#endif  // WECC_CHECKS_HPP
