#include "wecc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

#include "wecc/checks.hpp"
#include "wecc/enumerate.hpp"
#include "wecc/families.hpp"
#include "wecc/graph6.hpp"
#include "wecc/invariants.hpp"
#include "wecc/population.hpp"
#include "wecc/report.hpp"
#include "wecc/transforms.hpp"

namespace wecc {
namespace {

// Cycles added to the self-centered bound's population.
constexpr std::size_t kMaxCycleOrder = 99;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InvariantsOptions {
  bool line_graph = false;
  std::vector<Vertex> contract;
};

struct FamilyOptions {
  std::string name;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> t;
  std::vector<std::int64_t> legs;
  std::vector<std::int64_t> leaf_counts;
  std::vector<std::int64_t> parts;
};

struct SweepOptions {
  std::string check = "all";
  int conjecture = 0;
  std::optional<std::string> counterexamples;
};

FamilySpec family_spec(const FamilyOptions& o) {
  const auto family = parse_family(o.name);
  if (!family) throw UsageError("unknown family: " + o.name);
  FamilySpec spec{*family, {}};
  auto need_n = [&] {
    if (!o.n) throw UsageError(o.name + " requires --n");
    return *o.n;
  };
  switch (*family) {
    case Family::kPath:
    case Family::kCycle:
    case Family::kStar:
    case Family::kComplete:
      spec.params = {need_n()};
      break;
    case Family::kCompleteBipartite:
      if (o.parts.size() != 2) throw UsageError("complete_bipartite requires --parts a,b");
      spec.params = o.parts;
      break;
    case Family::kKnMinusMatching:
      spec.params = {need_n(), o.t.value_or(0)};
      break;
    case Family::kCaterpillar:
      if (o.leaf_counts.empty()) throw UsageError("caterpillar requires --leaf-counts");
      spec.params = o.leaf_counts;
      break;
    case Family::kSpider:
      spec.params = o.legs;
      break;
    case Family::kT7:
    case Family::kT8:
    case Family::kPaw:
      break;
  }
  return spec;
}

void report_issues(const std::vector<InputIssue>& issues, std::ostream& err) {
  for (const auto& issue : issues) err << "line " << issue.line << ": " << issue.message << '\n';
}

int run_invariants(const RunConfig& cfg, const InvariantsOptions& opt, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  std::ifstream file;
  std::istream* source = &in;
  if (cfg.input && *cfg.input != "-") {
    file.open(*cfg.input);
    if (!file) throw UsageError("cannot open " + *cfg.input);
    source = &file;
  }
  if (cfg.format == OutputFormat::kCsv) out << csv_header() << '\n';
  G6StreamReader reader(*source, cfg.strict);
  while (auto g = reader.next()) {
    const std::size_t line = reader.line_number();
    Graph graph = std::move(*g);
    try {
      if (!opt.contract.empty()) graph = contract_edge(graph, Edge{opt.contract[0], opt.contract[1]});
      if (opt.line_graph) graph = line_graph(graph);
    } catch (const GraphError& e) {
      err << "line " << line << ": " << e.what() << "; skipped\n";
      continue;
    }
    if (!is_connected(graph)) {
      err << "line " << line << ": graph is disconnected; skipped\n";
      continue;
    }
    const auto s = summarize(graph);
    out << (cfg.format == OutputFormat::kCsv ? summary_csv_row(graph, s) : summary_record(graph, s))
        << '\n';
  }
  report_issues(reader.issues(), err);
  return static_cast<int>(ExitCode::kClean);
}

int run_enumerate(const RunConfig& cfg, bool trees, std::ostream& out) {
  if (trees) {
    if (cfg.max_n < 1 || cfg.max_n > kMaxTreeOrder) {
      throw UsageError("--n must lie in 1.." + std::to_string(kMaxTreeOrder) + " for trees");
    }
    FreeTreeGenerator gen(cfg.max_n);
    while (auto seq = gen.next()) out << g6_encode(seq->to_graph()) << '\n';
  } else {
    if (cfg.max_n < 1 || cfg.max_n > kMaxGraphOrder) {
      throw UsageError("--n must lie in 1.." + std::to_string(kMaxGraphOrder) +
                       " for graphs; use graph6 files for larger orders");
    }
    ConnectedGraphEnumerator gen(cfg.max_n);
    while (auto g = gen.next()) out << g6_encode(*g) << '\n';
  }
  return static_cast<int>(ExitCode::kClean);
}

// Native population a check runs on at a given ceiling; nullopt when the
// check does not apply there.
std::optional<std::string> population_key(CheckId id, std::size_t max_n) {
  if (is_tree_check(id)) return std::string("trees");
  if (id == CheckId::kConj2) return std::string("trees+graphs");
  if (max_n > kMaxGraphOrder) return std::nullopt;
  if (id == CheckId::kT23ii) return std::string("graphs+cycles");
  return std::string("graphs");
}

Population native_population(const std::string& key, std::size_t max_n) {
  if (key == "trees") return tree_population(1, max_n);
  if (key == "graphs") return connected_graph_population(1, max_n);
  if (key == "graphs+cycles") {
    // Cycles up to max_n are already among the connected graphs.
    return concat(connected_graph_population(1, max_n),
                  cycle_population(std::max<std::size_t>(3, max_n + 1), kMaxCycleOrder));
  }
  return concat(tree_population(1, max_n),
                connected_graph_population(1, std::min(max_n, kMaxGraphOrder)));
}

int run_sweep(const RunConfig& cfg, std::vector<CheckId> ids, bool explicit_ids,
              const SweepOptions& opt, std::ostream& out, std::ostream& err) {
  if (cfg.input.has_value() == (cfg.max_n != 0)) {
    throw UsageError("give exactly one of --max-n and --input");
  }
  std::ofstream counterexamples;
  if (opt.counterexamples) {
    counterexamples.open(*opt.counterexamples, std::ios::app);
    if (!counterexamples) throw UsageError("cannot open " + *opt.counterexamples);
  }
  FindingSink sink;
  if (counterexamples.is_open()) {
    sink = [&](CheckId id, std::string_view kind, const Violation& f) {
      counterexamples << finding_line(id, kind, f) << '\n';
      counterexamples.flush();
    };
  }

  std::map<CheckId, CheckVerdict> verdicts;
  if (cfg.input) {
    const Population pop = file_population(*cfg.input, cfg.strict);
    report_issues(pop.issues, err);
    for (auto& v : run_checks(ids, pop, cfg.jobs, sink)) verdicts.emplace(v.id, std::move(v));
  } else {
    if (cfg.max_n > kMaxTreeOrder) {
      throw UsageError("--max-n above ceiling " + std::to_string(kMaxTreeOrder));
    }
    std::map<std::string, std::vector<CheckId>> groups;
    for (CheckId id : ids) {
      const auto key = population_key(id, cfg.max_n);
      if (key) {
        groups[*key].push_back(id);
        continue;
      }
      if (explicit_ids) {
        throw UsageError(std::string(check_name(id)) + ": --max-n above graph ceiling " +
                         std::to_string(kMaxGraphOrder) + "; use --input");
      }
      CheckVerdict skipped = empty_verdict(id, "connected_graphs(n=1.." + std::to_string(cfg.max_n) + ")");
      skipped.applicable = false;
      verdicts.emplace(id, std::move(skipped));
    }
    for (const auto& [key, group] : groups) {
      const Population pop = native_population(key, cfg.max_n);
      for (auto& v : run_checks(group, pop, cfg.jobs, sink)) verdicts.emplace(v.id, std::move(v));
    }
  }

  bool violation = false;
  for (CheckId id : ids) {
    const CheckVerdict& v = verdicts.at(id);
    out << verdict_record(v) << '\n';
    violation = violation || !v.clean();
  }
  return static_cast<int>(violation ? ExitCode::kViolation : ExitCode::kClean);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Wiener index and eccentricity toolkit", "wecc"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "records";

  auto* invariants = app.add_subcommand("invariants", "invariants of graph6 input, one record per graph");
  InvariantsOptions inv;
  std::string positional_input;
  invariants->add_option("source", positional_input, "graph6 file, or - for standard input");
  invariants->add_option("--input", cfg.input, "graph6 file, or - for standard input");
  invariants->add_option("--format", format, "records or csv")->check(CLI::IsMember({"records", "csv"}));
  invariants->add_flag("--line-graph", inv.line_graph, "replace each graph by its line graph");
  invariants->add_option("--contract", inv.contract, "contract edge u v before measuring")
      ->expected(2);
  invariants->add_flag("--strict", cfg.strict, "abort on a malformed line");

  auto* family = app.add_subcommand("family", "emit one named graph as graph6");
  FamilyOptions fam;
  family->add_option("name", fam.name, "family name")->required();
  family->add_option("--n", fam.n, "order");
  family->add_option("--t", fam.t, "matching size for kn_minus_matching");
  family->add_option("--legs", fam.legs, "spider leg lengths")->delimiter(',');
  family->add_option("--leaf-counts", fam.leaf_counts, "caterpillar leaves per spine vertex")
      ->delimiter(',');
  family->add_option("--parts", fam.parts, "complete_bipartite part sizes")->delimiter(',');

  auto* enumerate = app.add_subcommand("enumerate", "emit all trees or connected graphs of one order");
  bool trees = false;
  bool graphs = false;
  auto* trees_flag = enumerate->add_flag("--trees", trees, "free trees");
  auto* graphs_flag = enumerate->add_flag("--graphs", graphs, "connected graphs");
  trees_flag->excludes(graphs_flag);
  enumerate->add_option("--n", cfg.max_n, "order")->required();

  SweepOptions sweep;
  auto* verify = app.add_subcommand("verify", "run catalog checks over a population");
  verify->add_option("--check", sweep.check, "check id or all");
  verify->add_option("--max-n", cfg.max_n, "largest order of the native population");
  verify->add_option("--input", cfg.input, "graph6 population file");
  verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--counterexamples", sweep.counterexamples, "append findings to this file");
  verify->add_flag("--strict", cfg.strict, "abort on a malformed line");

  auto* search = app.add_subcommand("search", "search for counterexamples to a conjecture");
  search->add_option("--conjecture", sweep.conjecture, "1 or 2")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  search->add_option("--max-n", cfg.max_n, "largest order of the native population");
  search->add_option("--input", cfg.input, "graph6 population file");
  search->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("--counterexamples", sweep.counterexamples, "append findings to this file");
  search->add_flag("--strict", cfg.strict, "abort on a malformed line");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return static_cast<int>(ExitCode::kClean);
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return static_cast<int>(ExitCode::kClean);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return static_cast<int>(ExitCode::kUsage);
  }
  cfg.format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kRecords;

  try {
    if (invariants->parsed()) {
      cfg.subcommand = "invariants";
      if (!positional_input.empty()) {
        if (cfg.input) throw UsageError("give the input either positionally or with --input");
        cfg.input = positional_input;
      }
      return run_invariants(cfg, inv, in, out, err);
    }
    if (family->parsed()) {
      cfg.subcommand = "family";
      out << g6_encode(build(family_spec(fam))) << '\n';
      return static_cast<int>(ExitCode::kClean);
    }
    if (enumerate->parsed()) {
      cfg.subcommand = "enumerate";
      if (!trees && !graphs) throw UsageError("enumerate needs --trees or --graphs");
      return run_enumerate(cfg, trees, out);
    }
    if (verify->parsed()) {
      cfg.subcommand = "verify";
      if (sweep.check == "all") {
        const auto ids = all_checks();
        return run_sweep(cfg, {ids.begin(), ids.end()}, false, sweep, out, err);
      }
      const auto id = parse_check_id(sweep.check);
      if (!id) throw UsageError("unknown check id: " + sweep.check);
      return run_sweep(cfg, {*id}, true, sweep, out, err);
    }
    cfg.subcommand = "search";
    const CheckId id = sweep.conjecture == 1 ? CheckId::kConj1 : CheckId::kConj2;
    return run_sweep(cfg, {id}, true, sweep, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Graph6Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return static_cast<int>(ExitCode::kUsage);
}

}  // namespace wecc
