#include "analysis.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <utility>
#include <vector>

#include "cheeger.hpp"
#include "eigen.hpp"
#include "error.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "parse.hpp"

namespace ofc {

namespace {

using json = nlohmann::ordered_json;

json parse_json_object(const std::string& text, const char* what) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::syntax_error, std::string(what) + ": " + e.what());
  }
  if (!j.is_object()) fail(errc::syntax_error, std::string(what) + " must be a JSON object");
  return j;
}

const char* verdict_of(verdict v) { return verdict_name(v); }

template <class K>
json side_json(const std::optional<K>& value, double approx) {
  json s;
  s["value"] = value ? json(format_element(*value)) : json(nullptr);
  s["approx"] = approx;
  return s;
}

template <class K>
std::vector<std::string> mask_labels(const OFGraph<K>& g, std::uint64_t mask) {
  std::vector<std::string> out;
  for (int x = 0; x < g.size(); ++x) {
    if (mask >> x & 1) out.push_back(g.label(x));
  }
  return out;
}

// Expected-value annotations, used for scripted negative-path runs:
//   {"hbar": "2/3", "eigenvalues": ["0", "2"], "connected": true,
//    "bipartite": false}
// Each present key turns into one extra row of the verdict table.
template <class K>
void apply_expectations(const json& expect, const OFGraph<K>& g,
                        CheegerCertificate<K>& cert) {
  if (auto it = expect.find("hbar"); it != expect.end()) {
    if (!it->is_string()) fail(errc::syntax_error, "expect.hbar must be a string");
    K want = parse_element<K>(it->get<std::string>());
    InequalityCheck<K> c;
    c.name = "expected-dual-cheeger";
    // cross-multiplied so the divided form's truncation cannot blur an exact
    // annotation
    c.v = verdict_iff_equal(Field<K>::compare(cert.hbar_num, want * cert.hbar_den), true);
    c.lhs = cert.hbar;
    c.rhs = want;
    c.lhs_approx = Field<K>::std_double(cert.hbar);
    c.rhs_approx = Field<K>::std_double(want);
    cert.checks.push_back(std::move(c));
  }
  if (auto it = expect.find("eigenvalues"); it != expect.end()) {
    if (!it->is_array()) fail(errc::syntax_error, "expect.eigenvalues must be an array");
    InequalityCheck<K> c;
    c.name = "expected-eigenvalues";
    std::vector<K> want;
    for (const json& v : *it) {
      if (!v.is_string()) fail(errc::syntax_error, "expect.eigenvalues entries must be strings");
      want.push_back(parse_element<K>(v.get<std::string>()));
    }
    std::vector<const EigenEntry<K>*> flat;
    for (const auto& e : cert.spectrum.entries) {
      for (int i = 0; i < e.multiplicity; ++i) flat.push_back(&e);
    }
    if (want.size() != flat.size()) {
      c.v = verdict::fails;
      c.note = "expected " + std::to_string(want.size()) + " eigenvalues, spectrum has " +
               std::to_string(flat.size());
    } else {
      c.v = verdict::holds;
      for (std::size_t i = 0; i < want.size(); ++i) {
        if (!flat[i]->value) {
          c.v = verdict_and(c.v, verdict::indistinguishable);
          c.note = "spectrum entry near " + std::to_string(flat[i]->approx) +
                   " has no exact form";
          continue;
        }
        c.v = verdict_and(c.v,
                          verdict_iff_equal(Field<K>::compare(*flat[i]->value, want[i]), true));
      }
    }
    cert.checks.push_back(std::move(c));
  }
  auto flag_check = [&](const char* key, const char* name, bool actual) {
    auto it = expect.find(key);
    if (it == expect.end()) return;
    if (!it->is_boolean()) fail(errc::syntax_error, std::string("expect.") + key + " must be a boolean");
    InequalityCheck<K> c;
    c.name = name;
    c.v = it->get<bool>() == actual ? verdict::holds : verdict::fails;
    c.note = std::string(key) + (actual ? ": true" : ": false");
    cert.checks.push_back(std::move(c));
  };
  flag_check("connected", "expected-connected", g.is_connected());
  flag_check("bipartite", "expected-bipartite", g.is_bipartite());
}

template <class K>
ReportResult build_report(const GraphDoc& doc, const AnalyzeOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  auto g = OFGraph<K>::from_doc(doc);

  json expect = json::object();
  if (!opt.expect_json.empty()) expect = parse_json_object(opt.expect_json, "expect document");

  CheegerCertificate<K> cert = certify(g, opt.max_bruteforce);
  apply_expectations(expect, g, cert);

  json rep;
  rep["schema"] = "ofc-report/1";

  json input;
  input["field"] = backend_name(doc.field);
  input["vertex_count"] = g.size();
  input["edge_count"] = g.edge_count();
  input["vertices"] = doc.vertices;
  input["truncation_window"] = g.budget().window.str();
  input["connected"] = g.is_connected();
  input["bipartite"] = g.is_bipartite();
  input["components"] = g.connected_components().size();
  rep["input"] = std::move(input);

  json spec;
  json eigs = json::array();
  for (const auto& e : cert.spectrum.entries) {
    json row;
    row["value"] = e.value ? json(format_element(*e.value)) : json(nullptr);
    row["approx"] = e.approx;
    if (e.std_exact) row["standard_part"] = e.std_exact->str();
    row["multiplicity"] = e.multiplicity;
    row["status"] = eig_status_name(e.status);
    eigs.push_back(std::move(row));
  }
  spec["eigenvalues"] = std::move(eigs);
  spec["total_multiplicity"] = cert.spectrum.total_multiplicity();
  spec["zero_multiplicity"] = cert.spectrum.zero_multiplicity();
  rep["spectrum"] = std::move(spec);

  json hbar;
  hbar["value"] = format_element(cert.hbar);
  hbar["approx"] = Field<K>::std_double(cert.hbar);
  hbar["numerator"] = format_element(cert.hbar_num);
  hbar["denominator"] = format_element(cert.hbar_den);
  hbar["witness"] = json::array({mask_labels(g, cert.part1), mask_labels(g, cert.part2)});
  rep["dual_cheeger"] = std::move(hbar);

  report_outcome outcome = report_outcome::pass;
  json checks = json::array();
  for (const auto& c : cert.checks) {
    json row;
    row["name"] = c.name;
    row["verdict"] = verdict_of(c.v);
    row["lhs"] = side_json(c.lhs, c.lhs_approx);
    row["rhs"] = side_json(c.rhs, c.rhs_approx);
    if (!c.note.empty()) row["note"] = c.note;
    checks.push_back(std::move(row));
    if (c.v == verdict::fails) {
      outcome = report_outcome::fail;
    } else if (c.v == verdict::indistinguishable && outcome == report_outcome::pass) {
      outcome = report_outcome::indeterminate;
    }
  }
  rep["checks"] = std::move(checks);
  rep["notes"] = cert.notes;
  rep["retried"] = cert.retried;
  rep["outcome"] = report_outcome_name(outcome);

  const auto t1 = std::chrono::steady_clock::now();
  rep["timing_ms"] =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0).count();

  return ReportResult{rep.dump(2) + "\n", outcome};
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else out += ch;
  }
  return out;
}

std::string md_side(const json& side) {
  if (!side.is_object()) return "";
  const json& v = side["value"];
  if (v.is_string()) return "`" + md_escape(v.get<std::string>()) + "`";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", side["approx"].get<double>());
  return std::string("~") + buf;
}

}  // namespace

AnalyzeOptions parse_analyze_options(const std::string& text) {
  AnalyzeOptions opt;
  if (text.empty()) return opt;
  json j = parse_json_object(text, "options document");
  if (auto it = j.find("truncation_order"); it != j.end() && !it->is_null()) {
    Rat t;
    if (it->is_string()) {
      t = parse_element<Rat>(it->get<std::string>());
    } else if (it->is_number_integer()) {
      t = Rat(static_cast<long>(it->get<long long>()));
    } else {
      fail(errc::syntax_error, "truncation_order must be a rational literal string");
    }
    if (t.sign() <= 0) fail(errc::invalid_argument, "truncation_order must be positive");
    opt.truncation_order = t;
  }
  if (auto it = j.find("max_bruteforce"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer()) fail(errc::syntax_error, "max_bruteforce must be an integer");
    long v = it->get<long long>();
    if (v < 2 || v > 64) fail(errc::invalid_argument, "max_bruteforce must be in [2, 64]");
    opt.max_bruteforce = static_cast<int>(v);
  }
  if (auto it = j.find("expect"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) fail(errc::syntax_error, "expect must be an object");
    opt.expect_json = it->dump();
  }
  return opt;
}

const char* report_outcome_name(report_outcome o) {
  switch (o) {
    case report_outcome::pass:
      return "pass";
    case report_outcome::fail:
      return "fail";
    case report_outcome::indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

ReportResult analyze_graph(const GraphDoc& doc, const AnalyzeOptions& opt) {
  GraphDoc d = doc;
  if (opt.truncation_order) d.truncation_order = opt.truncation_order;
  switch (d.field) {
    case backend::rational:
      return build_report<Rat>(d, opt);
    case backend::floating:
      return build_report<FloatReal>(d, opt);
    case backend::lc_rational:
      return build_report<SeriesRat>(d, opt);
    case backend::lc_float:
      return build_report<SeriesFloat>(d, opt);
  }
  fail(errc::internal, "unhandled backend");
}

std::string report_to_markdown(const std::string& report_json) {
  json rep = parse_json_object(report_json, "report document");
  std::string md;
  md += "# Graph certification report\n\n";

  const json& in = rep.at("input");
  md += "## Input\n\n";
  md += "- field: " + in.at("field").get<std::string>() + "\n";
  md += "- vertices: " + std::to_string(in.at("vertex_count").get<int>());
  md += " | edges: " + std::to_string(in.at("edge_count").get<int>()) + "\n";
  md += "- truncation window: " + in.at("truncation_window").get<std::string>() + "\n";
  md += std::string("- connected: ") + (in.at("connected").get<bool>() ? "yes" : "no");
  md += std::string(" | bipartite: ") + (in.at("bipartite").get<bool>() ? "yes" : "no");
  md += " | components: " + std::to_string(in.at("components").get<int>()) + "\n\n";

  md += "## Spectrum\n\n";
  md += "| eigenvalue | approx | multiplicity | status |\n";
  md += "| --- | --- | --- | --- |\n";
  for (const json& e : rep.at("spectrum").at("eigenvalues")) {
    std::string v = e.at("value").is_string()
                        ? "`" + md_escape(e.at("value").get<std::string>()) + "`"
                        : std::string("(no exact form)");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", e.at("approx").get<double>());
    md += "| " + v + " | " + buf + " | " + std::to_string(e.at("multiplicity").get<int>()) +
          " | " + e.at("status").get<std::string>() + " |\n";
  }
  md += "\n";

  const json& hb = rep.at("dual_cheeger");
  md += "## Dual Cheeger constant\n\n";
  md += "- value: `" + hb.at("value").get<std::string>() + "`\n";
  md += "- fraction: `" + hb.at("numerator").get<std::string>() + "` / `" +
        hb.at("denominator").get<std::string>() + "`\n";
  auto part = [](const json& arr) {
    std::string s = "{";
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (i) s += ", ";
      s += arr[i].get<std::string>();
    }
    return s + "}";
  };
  md += "- witness: " + part(hb.at("witness")[0]) + " vs " + part(hb.at("witness")[1]) + "\n\n";

  md += "## Checks\n\n";
  md += "| check | verdict | lhs | rhs | note |\n";
  md += "| --- | --- | --- | --- | --- |\n";
  for (const json& c : rep.at("checks")) {
    std::string note = c.contains("note") ? md_escape(c.at("note").get<std::string>()) : "";
    md += "| " + c.at("name").get<std::string>() + " | " + c.at("verdict").get<std::string>() +
          " | " + md_side(c.at("lhs")) + " | " + md_side(c.at("rhs")) + " | " + note + " |\n";
  }
  md += "\n";

  if (!rep.at("notes").empty()) {
    md += "## Notes\n\n";
    for (const json& n : rep.at("notes")) md += "- " + n.get<std::string>() + "\n";
    md += "\n";
  }

  char buf[40];
  std::snprintf(buf, sizeof buf, "%.1f", rep.at("timing_ms").get<double>());
  md += "Outcome: **" + rep.at("outcome").get<std::string>() + "**";
  if (rep.at("retried").get<bool>()) md += " (after one budget retry)";
  md += std::string(", ") + buf + " ms\n";
  return md;
}

}  // namespace ofc
