#include "wecc/checks.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "wecc/families.hpp"
#include "wecc/graph6.hpp"
#include "wecc/transforms.hpp"

namespace wecc {
namespace {

struct CheckInfo {
  CheckId id;
  std::string_view name;
  std::string_view statement;
};

constexpr std::array kCatalog = {
    CheckInfo{CheckId::kT21, "T21", "W >= ecc + m - n; equality iff K_n minus a matching"},
    CheckInfo{CheckId::kT22, "T22", "n >= 4: W >= ecc; equality iff G in {P4, C4}"},
    CheckInfo{CheckId::kDank, "DANK", "2W <= (n-1) ecc; equality iff complete"},
    CheckInfo{CheckId::kT23i, "T23i", "2W <= (n-1) ecc - xi + 2m; equality iff diam <= 2"},
    CheckInfo{CheckId::kT23ii, "T23ii",
              "self-centered, n >= 3: 8(W - ecc) <= n(n-2)^2 (n even) or n((n-2)^2 - 1) (n odd); "
              "equality iff odd cycle"},
    CheckInfo{CheckId::kNG, "NG",
              "G and complement connected: 2(W + W') <= n(n-1) + (n-1)(ecc + ecc') - xi - xi'"},
    CheckInfo{CheckId::kTStar, "TSTAR", "trees, n >= 3: 4W <= (2n-3) ecc + 1; equality iff star"},
    CheckInfo{CheckId::kTCat, "TCAT",
              "trees: min(W - ecc) over caterpillars equals min over all trees; leaf move "
              "changes W by sn - s^2 - 2s and ecc by s"},
    CheckInfo{CheckId::kTLine, "TLINE",
              "trees, n >= 2: 2(W - ecc) = 2(W_L - ecc_L) + n(n-3) - 2r + 2"},
    CheckInfo{CheckId::kPEcc, "PECC",
              "trees: ecc = d(p) + nr (one center), 2 ecc = d(p) + d(q) - n + 2nr (two centers)"},
    CheckInfo{CheckId::kTRad, "TRAD",
              "trees: ecc >= r(n+r+1) (one center), 2 ecc >= 2r(n+r) - n (two centers); "
              "equality iff path"},
    CheckInfo{CheckId::kBuck, "BUCK", "trees, n >= 2: W(T) = W(L(T)) + n(n-1)/2"},
    CheckInfo{CheckId::kTBridge, "TBRIDGE",
              "n >= 3, e a bridge: W(G.e) - ecc(G.e) <= W - ecc and "
              "W - W(G.e) = d_Gu(u) + d_Gv(v) + n(Gu) n(Gv)"},
    CheckInfo{CheckId::kConj1, "CONJ1", "n >= 3, any edge e: W(G.e) - ecc(G.e) <= W - ecc"},
    CheckInfo{CheckId::kConj2, "CONJ2",
              "rad >= 4: W - ecc <= floor((2n^3 - 9n^2 + 4n + 3)/12); equality iff path"},
};

constexpr std::array kIds = {
    CheckId::kT21,   CheckId::kT22,  CheckId::kDank,  CheckId::kT23i, CheckId::kT23ii,
    CheckId::kNG,    CheckId::kTStar, CheckId::kTCat, CheckId::kTLine, CheckId::kPEcc,
    CheckId::kTRad,  CheckId::kBuck, CheckId::kTBridge, CheckId::kConj1, CheckId::kConj2,
};

const CheckInfo& info(CheckId id) {
  for (const auto& c : kCatalog) {
    if (c.id == id) return c;
  }
  return kCatalog.front();
}

enum class Expect { kAtMost, kAtLeast, kEqual };

// Records lhs against rhs; when `member` is given, also compares the claimed
// equality class with the observed equality.
void assess(const GraphContext& ctx, CheckVerdict& v, Expect expect, std::int64_t lhs,
            std::int64_t rhs, std::optional<bool> member, std::string detail = {}) {
  bool holds = false;
  switch (expect) {
    case Expect::kAtMost:
      holds = lhs <= rhs;
      break;
    case Expect::kAtLeast:
      holds = lhs >= rhs;
      break;
    case Expect::kEqual:
      holds = lhs == rhs;
      break;
  }
  if (!holds) v.violations.push_back({ctx.graph6(), std::move(detail), lhs, rhs});
  const bool equal = lhs == rhs;
  if (equal && expect != Expect::kEqual) ++v.equality_cases;
  if (member && *member != equal) {
    v.equality_mismatches.push_back({ctx.graph6(), *member, equal, lhs, rhs});
  }
}


void check_t21(const GraphContext& ctx, CheckVerdict& v) {
  const auto& s = ctx.summary();
  if (s.order < 2) {
    ++v.skipped;
    return;
  }
  ++v.graphs_tested;
  assess(ctx, v, Expect::kAtLeast, s.wiener, s.total_ecc + s.size - s.order,
         is_kn_minus_matching(ctx.graph()));
}

void check_t22(const GraphContext& ctx, CheckVerdict& v) {
  const auto& s = ctx.summary();
  if (s.order < 4) {
    ++v.skipped;
    return;
  }
  ++v.graphs_tested;
  const bool member = s.order == 4 && (is_path(ctx.graph()) || is_cycle(ctx.graph()));
  assess(ctx, v, Expect::kAtLeast, s.wiener, s.total_ecc, member);
}

void check_dank(const GraphContext& ctx, CheckVerdict& v) {
  const auto& s = ctx.summary();
  ++v.graphs_tested;
  assess(ctx, v, Expect::kAtMost, 2 * s.wiener, (s.order - 1) * s.total_ecc,
         is_complete(ctx.graph()));
}

void check_t23i(const GraphContext& ctx, CheckVerdict& v) {
  const auto& s = ctx.summary();
  ++v.graphs_tested;
  assess(ctx, v, Expect::kAtMost, 2 * s.wiener,
         (s.order - 1) * s.total_ecc - s.ecc_connectivity + 2 * s.size, s.diameter <= 2);
}

void check_t23ii(const GraphContext& ctx, CheckVerdict& v) {
  const auto& s = ctx.summary();
  if (s.order < 3 || !is_self_centered(s)) {
    ++v.skipped;
    return;
  }
  ++v.graphs_tested;
  const std::int64_t n = s.order;
  const std::int64_t sq = (n - 2) * (n - 2);
  const std::int64_t rhs = n % 2 == 0 ? n * sq : n * (sq - 1);
  const bool member = n % 2 == 1 && is_cycle(ctx.graph());
  assess(ctx, v, Expect::kAtMost, 8 * s.wiener_minus_ecc(), rhs, member);
}

void check_ng(const GraphContext& ctx, CheckVerdict& v) {
  const Graph co = complement(ctx.graph());
  if (!is_connected(co)) {
    ++v.skipped;
    return;
  }
  ++v.graphs_tested;
  const auto& s = ctx.summary();
  const auto c = summarize(co);
  const std::int64_t n = s.order;
  const std::int64_t lhs = 2 * (s.wiener + c.wiener);
  const std::int64_t rhs = n * (n - 1) + (n - 1) * (s.total_ecc + c.total_ecc) -
                           s.ecc_connectivity - c.ecc_connectivity;
  assess(ctx, v, Expect::kAtMost, lhs, rhs, std::nullopt);
}

void check_tstar(const GraphContext& ctx, CheckVerdict& v) {
  const auto& s = ctx.summary();
  if (!ctx.tree() || s.order < 3) {
    ++v.skipped;
    return;
  }
  ++v.graphs_tested;
  assess(ctx, v, Expect::kAtMost, 4 * s.wiener, (2 * s.order - 3) * s.total_ecc + 1,
         is_star(ctx.graph()));
}

void update_minimum(OrderMinimum& m, std::int64_t value, bool caterpillar,
                    const GraphContext& ctx) {
  if (!m.all_trees || value < *m.all_trees) {
    m.all_trees = value;
    m.all_witness = ctx.graph6();
    m.minimizers_all_caterpillars = caterpillar;
  } else if (value == *m.all_trees) {
    m.all_witness = std::min(m.all_witness, ctx.graph6());
    m.minimizers_all_caterpillars = m.minimizers_all_caterpillars && caterpillar;
  }
  if (caterpillar && (!m.caterpillars || value < *m.caterpillars)) m.caterpillars = value;
}

void check_tcat(const GraphContext& ctx, CheckVerdict& v) {
  if (!ctx.tree()) {
    ++v.skipped;
    return;
  }
  ++v.graphs_tested;
  const auto& s = ctx.summary();
  const bool caterpillar = is_caterpillar(ctx.graph());
  update_minimum(v.minima[s.order], s.wiener_minus_ecc(), caterpillar, ctx);
  if (caterpillar) return;

  const auto move = find_paper_leaf_move(ctx.graph());
  if (!move) {
    v.violations.push_back({ctx.graph6(), "no leaf move found on a non-caterpillar", 0, 0});
    return;
  }
  ++v.cases_tested;
  const Graph moved = apply_leaf_move(ctx.graph(), *move);
  const auto after = summarize(moved);
  const std::int64_t n = s.order;
  const auto count = static_cast<std::int64_t>(move->count());
  const std::int64_t wiener_delta = count * n - count * count - 2 * count;
  const std::string where = "donor=" + std::to_string(move->donor) +
                            " receiver=" + std::to_string(move->receiver) +
                            " s=" + std::to_string(count);
  assess(ctx, v, Expect::kEqual, s.wiener - after.wiener, wiener_delta,
         std::nullopt, "W delta, " + where);
  assess(ctx, v, Expect::kEqual, s.total_ecc - after.total_ecc, count, std::nullopt,
         "ecc delta, " + where);
  if (n < count + 4) v.violations.push_back({ctx.graph6(), "order below s + 4, " + where, n, count + 4});
  if (wiener_delta <= count) {
    v.violations.push_back({ctx.graph6(), "W delta not above ecc delta, " + where, wiener_delta,
                            count});
  }
}

void check_tline(const GraphContext& ctx, CheckVerdict& v, bool buckley) {
  const auto& s = ctx.summary();
  if (!ctx.tree() || s.order < 2) {
    ++v.skipped;
    return;
  }
  ++v.graphs_tested;
  const auto line = summarize(line_graph(ctx.graph()));
  const std::int64_t n = s.order;
  if (buckley) {
    assess(ctx, v, Expect::kEqual, s.wiener, line.wiener + n * (n - 1) / 2, std::nullopt,
           "Buckley identity");
  } else {
    assess(ctx, v, Expect::kEqual, 2 * s.wiener_minus_ecc(),
           2 * line.wiener_minus_ecc() + n * (n - 3) - 2 * s.radius + 2, std::nullopt,
           "line graph difference identity");
  }
}

void check_pecc(const GraphContext& ctx, CheckVerdict& v) {
  if (!ctx.tree()) {
    ++v.skipped;
    return;
  }
  ++v.graphs_tested;
  const auto& s = ctx.summary();
  const auto center = tree_center(ctx.graph());
  if (center != s.center) {
    v.violations.push_back({ctx.graph6(), "leaf-stripping center differs from eccentricity center",
                            static_cast<std::int64_t>(center.size()),
                            static_cast<std::int64_t>(s.center.size())});
    return;
  }
  const std::int64_t n = s.order;
  const std::int64_t r = s.radius;
  const std::int64_t dp = s.profiles[center[0]].transmission;
  if (center.size() == 1) {
    assess(ctx, v, Expect::kEqual, s.total_ecc, dp + n * r, std::nullopt, "one center");
  } else {
    const std::int64_t dq = s.profiles[center[1]].transmission;
    assess(ctx, v, Expect::kEqual, 2 * s.total_ecc, dp + dq - n + 2 * n * r, std::nullopt,
           "two centers");
  }
}

void check_trad(const GraphContext& ctx, CheckVerdict& v) {
  if (!ctx.tree()) {
    ++v.skipped;
    return;
  }
  ++v.graphs_tested;
  const auto& s = ctx.summary();
  const std::int64_t n = s.order;
  const std::int64_t r = s.radius;
  const bool member = is_path(ctx.graph());
  if (s.center.size() == 1) {
    assess(ctx, v, Expect::kAtLeast, s.total_ecc, r * (n + r + 1), member, "one center");
  } else {
    assess(ctx, v, Expect::kAtLeast, 2 * s.total_ecc, 2 * r * (n + r) - n, member, "two centers");
  }
}

void check_contractions(const GraphContext& ctx, CheckVerdict& v, bool bridges_only) {
  const auto& s = ctx.summary();
  if (s.order < 3) {
    ++v.skipped;
    return;
  }
  ++v.graphs_tested;
  const std::vector<Edge> edges = bridges_only ? bridges(ctx.graph()) : ctx.graph().edges();
  for (const Edge& e : edges) {
    ++v.cases_tested;
    const auto contracted = summarize(contract_edge(ctx.graph(), e));
    const std::string where = "edge " + to_string(e);
    assess(ctx, v, Expect::kAtMost, contracted.wiener_minus_ecc(), s.wiener_minus_ecc(),
           std::nullopt, where);
    if (bridges_only) {
      const BridgeSplit split = split_at_bridge(ctx.graph(), e);
      assess(ctx, v, Expect::kEqual, s.wiener - contracted.wiener, split.wiener_drop(),
             std::nullopt, "bridge W identity, " + where);
    }
  }
}

void check_conj2(const GraphContext& ctx, CheckVerdict& v) {
  const auto& s = ctx.summary();
  const std::int64_t bound = conjecture2_bound(s.order);
  const std::int64_t diff = s.wiener_minus_ecc();
  if (s.radius < 4) {
    ++v.skipped;
    if (diff == bound) {
      v.boundary_witnesses.push_back(
          {ctx.graph6(), "rad=" + std::to_string(s.radius), diff, bound});
    } else if (diff > bound) {
      ++v.boundary_exceedances;
    }
    return;
  }
  ++v.graphs_tested;
  assess(ctx, v, Expect::kAtMost, diff, bound, is_path(ctx.graph()),
         "rad=" + std::to_string(s.radius));
}

void merge_minimum(OrderMinimum& into, const OrderMinimum& from) {
  if (from.all_trees) {
    if (!into.all_trees || *from.all_trees < *into.all_trees) {
      into.all_trees = from.all_trees;
      into.all_witness = from.all_witness;
      into.minimizers_all_caterpillars = from.minimizers_all_caterpillars;
    } else if (*from.all_trees == *into.all_trees) {
      into.all_witness = std::min(into.all_witness, from.all_witness);
      into.minimizers_all_caterpillars =
          into.minimizers_all_caterpillars && from.minimizers_all_caterpillars;
    }
  }
  if (from.caterpillars && (!into.caterpillars || *from.caterpillars < *into.caterpillars)) {
    into.caterpillars = from.caterpillars;
  }
}

void emit(const FindingSink& sink, const CheckVerdict& v, std::size_t violations_from,
          std::size_t mismatches_from, std::size_t witnesses_from) {
  if (!sink) return;
  for (std::size_t i = violations_from; i < v.violations.size(); ++i) {
    sink(v.id, "violation", v.violations[i]);
  }
  for (std::size_t i = mismatches_from; i < v.equality_mismatches.size(); ++i) {
    const auto& m = v.equality_mismatches[i];
    sink(v.id, "equality_mismatch",
         Violation{m.graph6,
                   std::string("expected_member=") + (m.expected_member ? "true" : "false") +
                       " actual_equality=" + (m.actual_equality ? "true" : "false"),
                   m.lhs, m.rhs});
  }
  for (std::size_t i = witnesses_from; i < v.boundary_witnesses.size(); ++i) {
    sink(v.id, "boundary_witness", v.boundary_witnesses[i]);
  }
}

}  // namespace

std::string_view check_name(CheckId id) { return info(id).name; }
std::string_view check_statement(CheckId id) { return info(id).statement; }

std::optional<CheckId> parse_check_id(std::string_view name) {
  for (const auto& c : kCatalog) {
    if (c.name == name) return c.id;
  }
  return std::nullopt;
}

std::span<const CheckId> all_checks() { return kIds; }

bool is_conjecture(CheckId id) { return id == CheckId::kConj1 || id == CheckId::kConj2; }

bool is_tree_check(CheckId id) {
  switch (id) {
    case CheckId::kTStar:
    case CheckId::kTCat:
    case CheckId::kTLine:
    case CheckId::kPEcc:
    case CheckId::kTRad:
    case CheckId::kBuck:
      return true;
    default:
      return false;
  }
}

std::int64_t conjecture2_bound(std::int64_t n) {
  const std::int64_t numerator = 2 * n * n * n - 9 * n * n + 4 * n + 3;
  // Floor division for possibly negative numerators.
  std::int64_t q = numerator / 12;
  if (numerator % 12 != 0 && numerator < 0) --q;
  return q;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kVerified:
      return "verified";
    case Status::kRefuted:
      return "refuted";
    case Status::kPartial:
      return "partial";
    case Status::kSkipped:
      return "skipped";
  }
  return "unknown";
}

Status CheckVerdict::status() const {
  if (!applicable) return Status::kSkipped;
  if (!clean()) return Status::kRefuted;
  if (!completed || is_conjecture(id)) return Status::kPartial;
  return Status::kVerified;
}

GraphContext::GraphContext(const Graph& g)
    : graph_(g), distances_(all_pairs_distances(g)), connected_(is_connected(g)) {
  if (connected_) {
    summary_ = summarize(g, distances_);
    tree_ = g.size() + 1 == g.order();
  }
}

const std::string& GraphContext::graph6() const {
  if (!graph6_) graph6_ = g6_encode(graph_);
  return *graph6_;
}

CheckVerdict empty_verdict(CheckId id, std::string population) {
  CheckVerdict v;
  v.id = id;
  v.population = std::move(population);
  return v;
}

void check_graph(const GraphContext& ctx, CheckVerdict& v) {
  if (!ctx.connected()) {
    ++v.skipped;
    return;
  }
  switch (v.id) {
    case CheckId::kT21:
      return check_t21(ctx, v);
    case CheckId::kT22:
      return check_t22(ctx, v);
    case CheckId::kDank:
      return check_dank(ctx, v);
    case CheckId::kT23i:
      return check_t23i(ctx, v);
    case CheckId::kT23ii:
      return check_t23ii(ctx, v);
    case CheckId::kNG:
      return check_ng(ctx, v);
    case CheckId::kTStar:
      return check_tstar(ctx, v);
    case CheckId::kTCat:
      return check_tcat(ctx, v);
    case CheckId::kTLine:
      return check_tline(ctx, v, false);
    case CheckId::kPEcc:
      return check_pecc(ctx, v);
    case CheckId::kTRad:
      return check_trad(ctx, v);
    case CheckId::kBuck:
      return check_tline(ctx, v, true);
    case CheckId::kTBridge:
      return check_contractions(ctx, v, true);
    case CheckId::kConj1:
      return check_contractions(ctx, v, false);
    case CheckId::kConj2:
      return check_conj2(ctx, v);
  }
}

void merge(CheckVerdict& into, CheckVerdict&& from) {
  into.graphs_tested += from.graphs_tested;
  into.skipped += from.skipped;
  into.cases_tested += from.cases_tested;
  into.equality_cases += from.equality_cases;
  into.boundary_exceedances += from.boundary_exceedances;
  auto append = [](auto& dst, auto& src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
  };
  append(into.violations, from.violations);
  append(into.equality_mismatches, from.equality_mismatches);
  append(into.boundary_witnesses, from.boundary_witnesses);
  for (const auto& [order, minimum] : from.minima) merge_minimum(into.minima[order], minimum);
}

void finalize(CheckVerdict& v) {
  for (const auto& [order, m] : v.minima) {
    if (m.all_trees && m.caterpillars != m.all_trees) {
      v.violations.push_back({m.all_witness,
                              "n=" + std::to_string(order) +
                                  ": caterpillar minimum differs from tree minimum",
                              m.caterpillars.value_or(0), *m.all_trees});
    }
  }
  v.completed = true;
}

std::vector<CheckVerdict> run_checks(std::span<const CheckId> ids, const Population& pop,
                                     unsigned jobs, const FindingSink& sink) {
  std::vector<CheckVerdict> totals;
  for (CheckId id : ids) totals.push_back(empty_verdict(id, pop.descriptor));

  std::vector<std::vector<CheckVerdict>> partial(pop.chunks.size());
  run_ordered(
      pop.chunks.size(), jobs,
      [&](std::size_t i) {
        std::vector<CheckVerdict> local;
        for (CheckId id : ids) local.push_back(empty_verdict(id, pop.descriptor));
        pop.chunks[i]([&](const Graph& g) {
          const GraphContext ctx(g);
          for (auto& v : local) check_graph(ctx, v);
        });
        partial[i] = std::move(local);
      },
      [&](std::size_t i) {
        for (std::size_t k = 0; k < totals.size(); ++k) {
          emit(sink, partial[i][k], 0, 0, 0);
          merge(totals[k], std::move(partial[i][k]));
        }
        partial[i].clear();
      });

  for (auto& v : totals) {
    const std::size_t before = v.violations.size();
    finalize(v);
    emit(sink, v, before, v.equality_mismatches.size(), v.boundary_witnesses.size());
  }
  return totals;
}

CheckVerdict run_check(CheckId id, const Population& pop, unsigned jobs) {
  const CheckId ids[] = {id};
  return std::move(run_checks(ids, pop, jobs).front());
}

}  // namespace wecc
