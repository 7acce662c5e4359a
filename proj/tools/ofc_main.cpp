// Command-line front end. Everything flows through the C API in ofc/ofc.h;
// the JSON handling here is only flag plumbing.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ofc/ofc.h"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input_error = 2;
constexpr int exit_indeterminate = 3;

using json = nlohmann::ordered_json;

struct StringFree {
  void operator()(char* s) const { ofc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringFree>;

struct GraphFree {
  void operator()(ofc_graph* g) const { ofc_graph_free(g); }
};
using OwnedGraph = std::unique_ptr<ofc_graph, GraphFree>;

[[noreturn]] void die(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(exit_input_error);
}

[[noreturn]] void die_api(const char* what) {
  std::cerr << "error: " << what << ": " << ofc_last_error() << "\n";
  std::exit(exit_input_error);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunFlags {
  std::string input = "-";
  std::string backend;
  std::string truncation_order;
  int max_bruteforce = 0;
  std::string format = "json";
  std::string expect_path;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("input", f.input, "graph file path, or - for stdin")->default_val("-");
  cmd->add_option("--backend", f.backend,
                  "reinterpret the document in this backend "
                  "(rational, float, lc-rational, lc-float)");
  cmd->add_option("--truncation-order", f.truncation_order,
                  "series expansion window, positive rational");
  cmd->add_option("--max-bruteforce", f.max_bruteforce,
                  "vertex cap for the exhaustive Cheeger search")
      ->check(CLI::Range(2, 64));
  cmd->add_option("--format", f.format, "report format")
      ->check(CLI::IsMember({"json", "markdown"}))
      ->default_val("json");
  cmd->add_option("--expect", f.expect_path,
                  "JSON file with expected values (hbar, eigenvalues, "
                  "connected, bipartite); mismatches fail certification");
}

OwnedGraph parse_graph(const RunFlags& f) {
  std::string text = read_input(f.input);
  if (!f.backend.empty()) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      die(std::string("graph document: ") + e.what());
    }
    doc["field"] = f.backend;
    text = doc.dump();
  }
  ofc_graph* g = nullptr;
  if (ofc_graph_parse(text.c_str(), text.size(), &g) != OFC_OK) die_api("parse");
  return OwnedGraph(g);
}

std::string options_json(const RunFlags& f) {
  json opt = json::object();
  if (!f.truncation_order.empty()) opt["truncation_order"] = f.truncation_order;
  if (f.max_bruteforce > 0) opt["max_bruteforce"] = f.max_bruteforce;
  if (!f.expect_path.empty()) {
    std::string text = read_input(f.expect_path);
    try {
      opt["expect"] = json::parse(text);
    } catch (const json::exception& e) {
      die(std::string("expect document: ") + e.what());
    }
  }
  return opt.dump();
}

void print_report(const std::string& report, const std::string& format) {
  if (format == "markdown") {
    char* md = nullptr;
    if (ofc_report_to_markdown(report.c_str(), &md) != OFC_OK) die_api("render");
    OwnedString owned(md);
    std::cout << md;
  } else {
    std::cout << report;
  }
}

int run_analyze(const RunFlags& f) {
  OwnedGraph g = parse_graph(f);
  char* rep = nullptr;
  if (ofc_analyze(g.get(), options_json(f).c_str(), &rep) != OFC_OK) die_api("analyze");
  OwnedString owned(rep);
  print_report(rep, f.format);
  return exit_pass;
}

int run_certify(const RunFlags& f) {
  OwnedGraph g = parse_graph(f);
  char* rep = nullptr;
  int outcome = 0;
  if (ofc_certify(g.get(), options_json(f).c_str(), &rep, &outcome) != OFC_OK) {
    die_api("certify");
  }
  OwnedString owned(rep);
  print_report(rep, f.format);
  switch (outcome) {
    case OFC_CERTIFY_PASS:
      return exit_pass;
    case OFC_CERTIFY_FAIL:
      return exit_fail;
    default:
      return exit_indeterminate;
  }
}

int run_generate(const std::string& family, std::optional<long> n, std::optional<long> k,
                 const std::string& out_path) {
  json params = json::object();
  if (n) params["n"] = *n;
  if (k) params["k"] = *k;
  ofc_graph* g = nullptr;
  if (ofc_graph_generate(family.c_str(), params.dump().c_str(), &g) != OFC_OK) {
    die_api("generate");
  }
  OwnedGraph owned(g);
  char* doc = nullptr;
  if (ofc_graph_to_json(g, &doc) != OFC_OK) die_api("serialize");
  OwnedString owned_doc(doc);
  if (out_path.empty() || out_path == "-") {
    std::cout << doc;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) die("cannot write " + out_path);
    out << doc;
  }
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("ofc ") + ofc_version() +
               " - dual Cheeger constants and normalized Laplacian spectra "
               "over ordered fields"};
  app.require_subcommand(1);

  RunFlags analyze_flags;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "compute the spectrum, dual Cheeger constant and verdict table");
  add_run_flags(analyze, analyze_flags);

  RunFlags certify_flags;
  CLI::App* certify = app.add_subcommand(
      "certify", "same report as analyze; exit code reflects the verdicts");
  add_run_flags(certify, certify_flags);

  std::string family;
  std::optional<long> gen_n, gen_k;
  std::string gen_out;
  CLI::App* generate = app.add_subcommand("generate", "emit a worked example family");
  generate->add_option("family", family, "triangle, near-bipartite-complete or complete-unit")
      ->required();
  generate->add_option("--n", gen_n, "family size parameter");
  generate->add_option("--k", gen_k, "half size for near-bipartite-complete");
  generate->add_option("-o,--output", gen_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_input_error;
  }

  if (analyze->parsed()) return run_analyze(analyze_flags);
  if (certify->parsed()) return run_certify(certify_flags);
  return run_generate(family, gen_n, gen_k, gen_out);
}
