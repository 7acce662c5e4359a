#include "ofc/ofc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "analysis.hpp"
#include "error.hpp"
#include "field.hpp"
#include "generate.hpp"
#include "graph_doc.hpp"
#include "parse.hpp"

struct ofc_graph {
  ofc::GraphDoc doc;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ofc_status status_of(ofc::errc c) {
  using ofc::errc;
  switch (c) {
    case errc::invalid_argument:
      return OFC_ERR_INVALID_ARGUMENT;
    case errc::syntax_error:
    case errc::duplicate_edge:
    case errc::self_loop:
    case errc::nonpositive_weight:
    case errc::unknown_vertex:
    case errc::malformed_weight:
    case errc::backend_mismatch:
      return OFC_ERR_PARSE;
    case errc::division_by_zero:
    case errc::sqrt_of_negative:
    case errc::infinite_standard_part:
    case errc::isolated_vertex:
    case errc::edgeless_graph:
    case errc::dimension_mismatch:
    case errc::zero_vector:
      return OFC_ERR_DOMAIN;
    case errc::not_representable:
      return OFC_ERR_NOT_REPRESENTABLE;
    case errc::no_convergence:
      return OFC_ERR_NO_CONVERGENCE;
    case errc::size_cap_exceeded:
      return OFC_ERR_LIMIT;
    case errc::internal:
      return OFC_ERR_INTERNAL;
  }
  return OFC_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes + thread-local message.
template <class Fn>
ofc_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const ofc::error& e) {
    g_last_error = std::string(ofc::errc_name(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = std::string("internal: ") + e.what();
    return OFC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "internal: unknown error";
    return OFC_ERR_INTERNAL;
  }
}

ofc_status require(bool ok, const char* message) {
  if (ok) return OFC_OK;
  g_last_error = message;
  return OFC_ERR_INVALID_ARGUMENT;
}

template <class K>
std::string canonicalize(const std::string& expr) {
  return ofc::format_element(ofc::parse_element<K>(expr));
}

}  // namespace

extern "C" {

const char* ofc_version(void) { return "0.1.0"; }

const char* ofc_last_error(void) { return g_last_error.c_str(); }

void ofc_string_free(char* s) { std::free(s); }

ofc_status ofc_graph_parse(const char* json, size_t len, ofc_graph** out) {
  if (auto s = require(json && out, "null argument to ofc_graph_parse")) return s;
  return guarded([&] {
    ofc::GraphDoc doc = ofc::parse_graph_doc(std::string(json, len));
    *out = new ofc_graph{std::move(doc)};
    return OFC_OK;
  });
}

ofc_status ofc_graph_generate(const char* family, const char* params_json, ofc_graph** out) {
  if (auto s = require(family && out, "null argument to ofc_graph_generate")) return s;
  return guarded([&] {
    ofc::GraphDoc doc = ofc::generate_family(family, params_json ? params_json : "{}");
    *out = new ofc_graph{std::move(doc)};
    return OFC_OK;
  });
}

void ofc_graph_free(ofc_graph* g) { delete g; }

ofc_status ofc_graph_to_json(const ofc_graph* g, char** out_json) {
  if (auto s = require(g && out_json, "null argument to ofc_graph_to_json")) return s;
  return guarded([&] {
    *out_json = dup_string(ofc::graph_doc_to_json(g->doc));
    return *out_json ? OFC_OK : OFC_ERR_INTERNAL;
  });
}

int ofc_graph_vertex_count(const ofc_graph* g) {
  return g ? static_cast<int>(g->doc.vertices.size()) : -1;
}

int ofc_graph_edge_count(const ofc_graph* g) {
  return g ? static_cast<int>(g->doc.edges.size()) : -1;
}

const char* ofc_graph_field(const ofc_graph* g) {
  return g ? ofc::backend_name(g->doc.field) : nullptr;
}

ofc_status ofc_analyze(const ofc_graph* g, const char* options_json, char** out_report_json) {
  if (auto s = require(g && out_report_json, "null argument to ofc_analyze")) return s;
  return guarded([&] {
    ofc::AnalyzeOptions opt =
        ofc::parse_analyze_options(options_json ? std::string(options_json) : std::string());
    ofc::ReportResult res = ofc::analyze_graph(g->doc, opt);
    *out_report_json = dup_string(res.json);
    return *out_report_json ? OFC_OK : OFC_ERR_INTERNAL;
  });
}

ofc_status ofc_certify(const ofc_graph* g, const char* options_json, char** out_report_json,
                       int* out_outcome) {
  if (auto s = require(g && out_report_json && out_outcome, "null argument to ofc_certify")) {
    return s;
  }
  return guarded([&] {
    ofc::AnalyzeOptions opt =
        ofc::parse_analyze_options(options_json ? std::string(options_json) : std::string());
    ofc::ReportResult res = ofc::analyze_graph(g->doc, opt);
    switch (res.outcome) {
      case ofc::report_outcome::pass:
        *out_outcome = OFC_CERTIFY_PASS;
        break;
      case ofc::report_outcome::fail:
        *out_outcome = OFC_CERTIFY_FAIL;
        break;
      case ofc::report_outcome::indeterminate:
        *out_outcome = OFC_CERTIFY_INDETERMINATE;
        break;
    }
    *out_report_json = dup_string(res.json);
    return *out_report_json ? OFC_OK : OFC_ERR_INTERNAL;
  });
}

ofc_status ofc_report_to_markdown(const char* report_json, char** out_markdown) {
  if (auto s = require(report_json && out_markdown, "null argument to ofc_report_to_markdown")) {
    return s;
  }
  return guarded([&] {
    *out_markdown = dup_string(ofc::report_to_markdown(report_json));
    return *out_markdown ? OFC_OK : OFC_ERR_INTERNAL;
  });
}

ofc_status ofc_element_canonicalize(const char* expr, const char* backend, char** out_canonical) {
  if (auto s = require(expr && backend && out_canonical,
                       "null argument to ofc_element_canonicalize")) {
    return s;
  }
  return guarded([&] {
    auto tag = ofc::backend_from_name(backend);
    if (!tag) ofc::fail(ofc::errc::invalid_argument, std::string("unknown backend ") + backend);
    std::string s;
    switch (*tag) {
      case ofc::backend::rational:
        s = canonicalize<ofc::Rat>(expr);
        break;
      case ofc::backend::floating:
        s = canonicalize<ofc::FloatReal>(expr);
        break;
      case ofc::backend::lc_rational:
        s = canonicalize<ofc::SeriesRat>(expr);
        break;
      case ofc::backend::lc_float:
        s = canonicalize<ofc::SeriesFloat>(expr);
        break;
    }
    *out_canonical = dup_string(s);
    return *out_canonical ? OFC_OK : OFC_ERR_INTERNAL;
  });
}

}  // extern "C"
