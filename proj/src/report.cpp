#include "wecc/report.hpp"

#include <json.hpp>

#include "wecc/graph6.hpp"

namespace wecc {
namespace {

using Json = nlohmann::ordered_json;

bool caterpillar_flag(const Graph& g) { return is_tree(g) && is_caterpillar(g); }

Json finding_json(const Violation& v) {
  return Json{{"graph6", v.graph6}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"detail", v.detail}};
}

}  // namespace

std::string summary_record(const Graph& g, const InvariantSummary& s) {
  Json j;
  j["graph6"] = g6_encode(g);
  j["n"] = s.order;
  j["m"] = s.size;
  j["wiener"] = s.wiener;
  j["total_ecc"] = s.total_ecc;
  j["ecc_connectivity"] = s.ecc_connectivity;
  j["radius"] = s.radius;
  j["diameter"] = s.diameter;
  j["center"] = s.center;
  j["is_self_centered"] = is_self_centered(s);
  j["is_tree"] = is_tree(g);
  j["is_caterpillar"] = caterpillar_flag(g);
  return j.dump();
}

std::string_view csv_header() {
  return "graph6,n,m,wiener,total_ecc,ecc_connectivity,radius,diameter,is_tree,is_caterpillar,"
         "is_self_centered";
}

std::string summary_csv_row(const Graph& g, const InvariantSummary& s) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  // graph6 bytes never include a comma or a quote.
  std::string row = g6_encode(g);
  for (std::int64_t x : {s.order, s.size, s.wiener, s.total_ecc, s.ecc_connectivity, s.radius,
                         s.diameter}) {
    row += "," + std::to_string(x);
  }
  row += std::string(",") + flag(is_tree(g)) + "," + flag(caterpillar_flag(g)) + "," +
         flag(is_self_centered(s));
  return row;
}

std::string verdict_record(const CheckVerdict& v) {
  Json j;
  j["check_id"] = check_name(v.id);
  j["statement"] = check_statement(v.id);
  j["population"] = v.population;
  j["status"] = status_name(v.status());
  j["graphs_tested"] = v.graphs_tested;
  j["skipped"] = v.skipped;
  j["cases_tested"] = v.cases_tested;
  j["equality_cases"] = v.equality_cases;
  Json violations = Json::array();
  for (const auto& x : v.violations) violations.push_back(finding_json(x));
  j["violations"] = violations;
  Json mismatches = Json::array();
  for (const auto& m : v.equality_mismatches) {
    mismatches.push_back(Json{{"graph6", m.graph6},
                              {"expected_member", m.expected_member},
                              {"actual_equality", m.actual_equality},
                              {"lhs", m.lhs},
                              {"rhs", m.rhs}});
  }
  j["equality_mismatches"] = mismatches;
  if (v.id == CheckId::kConj2) {
    Json witnesses = Json::array();
    for (const auto& w : v.boundary_witnesses) witnesses.push_back(finding_json(w));
    j["boundary_witnesses"] = witnesses;
    j["boundary_exceedances"] = v.boundary_exceedances;
  }
  if (v.id == CheckId::kTCat) {
    Json minima = Json::array();
    for (const auto& [order, m] : v.minima) {
      Json row;
      row["n"] = order;
      row["min_all_trees"] = m.all_trees.value_or(0);
      row["min_caterpillars"] = m.caterpillars ? Json(*m.caterpillars) : Json(nullptr);
      row["witness"] = m.all_witness;
      row["all_minimizers_caterpillars"] = m.minimizers_all_caterpillars;
      minima.push_back(row);
    }
    j["minima"] = minima;
  }
  return j.dump();
}

std::string finding_line(CheckId id, std::string_view kind, const Violation& f) {
  std::string line(check_name(id));
  line += '\t';
  line += kind;
  line += '\t' + f.graph6 + '\t' + std::to_string(f.lhs) + '\t' + std::to_string(f.rhs) + '\t' +
          f.detail;
  return line;
}

}  // namespace wecc
