#pragma once

#include <optional>
#include <string>

#include "cheeger.hpp"
#include "graph_doc.hpp"
#include "rational.hpp"

namespace ofc {

struct AnalyzeOptions {
  std::optional<Rat> truncation_order;  // overrides the document's window
  int max_bruteforce = dual_cheeger_max_vertices;
  std::string expect_json;  // optional expected-value annotations, "" = none
};

// Options document: {"truncation_order": "8", "max_bruteforce": 14,
// "expect": {...}}. Empty or missing text yields the defaults.
AnalyzeOptions parse_analyze_options(const std::string& text);

enum class report_outcome { pass, fail, indeterminate };

const char* report_outcome_name(report_outcome o);

struct ReportResult {
  std::string json;
  report_outcome outcome = report_outcome::pass;
};

// Full certification run: spectrum, dual Cheeger constant with witness,
// verdict table, expected-value checks, notes and timing, serialized as one
// JSON document. The outcome folds the verdict table: fail beats
// indeterminate beats pass.
ReportResult analyze_graph(const GraphDoc& doc, const AnalyzeOptions& opt);

std::string report_to_markdown(const std::string& report_json);

}  // namespace ofc
