#ifndef WECC_REPORT_HPP
#define WECC_REPORT_HPP

#include <string>
#include <string_view>

#include "wecc/checks.hpp"
#include "wecc/graph.hpp"
#include "wecc/invariants.hpp"

namespace wecc {

/// One-line JSON record: graph6, n, m, wiener, total_ecc, ecc_connectivity,
/// radius, diameter, center, is_self_centered, is_tree, is_caterpillar.
std::string summary_record(const Graph& g, const InvariantSummary& s);

/// Fixed column order:
/// graph6,n,m,wiener,total_ecc,ecc_connectivity,radius,diameter,is_tree,is_caterpillar,is_self_centered
std::string_view csv_header();
std::string summary_csv_row(const Graph& g, const InvariantSummary& s);

/// One-line JSON record for a verdict.
std::string verdict_record(const CheckVerdict& v);

/// Tab-separated counterexample line: check, kind, graph6, lhs, rhs, detail.
std::string finding_line(CheckId id, std::string_view kind, const Violation& finding);

}  // namespace wecc

#endif  // WECC_REPORT_HPP
