#include "generate.hpp"

#include <json.hpp>

#include "error.hpp"

namespace ofc {

namespace {

std::string eps_pow_expr(long n) { return "e^" + std::to_string(n); }

long get_param(const nlohmann::json& params, const char* key) {
  auto it = params.find(key);
  if (it == params.end() || !it->is_number_integer()) {
    fail(errc::invalid_argument, std::string("missing integer parameter \"") + key + "\"");
  }
  return it->get<long>();
}

}  // namespace

GraphDoc generate_triangle(long n) {
  if (n < 1) fail(errc::invalid_argument, "triangle family needs n >= 1");
  GraphDoc doc;
  doc.field = backend::lc_rational;
  doc.vertices = {"x", "y", "z"};
  doc.edges = {{"x", "y", eps_pow_expr(n)}, {"x", "z", "1"}, {"y", "z", "1"}};
  return doc;
}

GraphDoc generate_near_bipartite_complete(long k, long n) {
  if (k < 2) fail(errc::invalid_argument, "near-bipartite-complete family needs k >= 2");
  if (n < 1) fail(errc::invalid_argument, "near-bipartite-complete family needs n >= 1");
  GraphDoc doc;
  doc.field = backend::lc_rational;
  long total = 2 * k;
  for (long i = 1; i <= total; ++i) doc.vertices.push_back("x" + std::to_string(i));
  // vertices 1..k form one half, k+1..2k the other
  for (long i = 1; i <= total; ++i) {
    for (long j = i + 1; j <= total; ++j) {
      bool same_half = (i <= k) == (j <= k);
      doc.edges.push_back({doc.vertices[i - 1], doc.vertices[j - 1],
                           same_half ? eps_pow_expr(n) : "1"});
    }
  }
  return doc;
}

GraphDoc generate_complete_unit(long n) {
  if (n < 2) fail(errc::invalid_argument, "complete-unit family needs n >= 2");
  GraphDoc doc;
  doc.field = backend::rational;
  for (long i = 1; i <= n; ++i) doc.vertices.push_back("x" + std::to_string(i));
  for (long i = 1; i <= n; ++i) {
    for (long j = i + 1; j <= n; ++j) {
      doc.edges.push_back({doc.vertices[i - 1], doc.vertices[j - 1], "1"});
    }
  }
  return doc;
}

GraphDoc generate_family(const std::string& family, const std::string& params_json) {
  nlohmann::json params;
  try {
    params = params_json.empty() ? nlohmann::json::object() : nlohmann::json::parse(params_json);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::syntax_error, std::string("family parameters: ") + e.what());
  }
  if (!params.is_object()) fail(errc::syntax_error, "family parameters must be a JSON object");
  if (family == "triangle") return generate_triangle(get_param(params, "n"));
  if (family == "near-bipartite-complete") {
    return generate_near_bipartite_complete(get_param(params, "k"), get_param(params, "n"));
  }
  if (family == "complete-unit") return generate_complete_unit(get_param(params, "n"));
  fail(errc::invalid_argument, "unknown family \"" + family + "\"");
}

}  // namespace ofc
