#include "graph_doc.hpp"

#include <json.hpp>

#include <set>
#include <utility>

#include "error.hpp"
#include "field.hpp"
#include "parse.hpp"

namespace ofc {

namespace {

using json = nlohmann::ordered_json;

template <class K>
void check_weight(const std::string& u, const std::string& v, const std::string& w) {
  K parsed;
  try {
    parsed = parse_element<K>(w);
  } catch (const error& err) {
    fail(errc::malformed_weight, "weight of edge {" + u + ", " + v + "}: " + err.what());
  }
  if (Field<K>::sign(parsed) <= 0) {
    fail(errc::nonpositive_weight,
         "weight of edge {" + u + ", " + v + "} must be positive: " + w);
  }
}

// Weights stay strings in the document, but they must already be valid
// positive elements of the declared field. Rejecting them here keeps every
// entry point (parse, not just graph construction) strict.
void check_weight_for(backend b, const std::string& u, const std::string& v,
                      const std::string& w) {
  switch (b) {
    case backend::rational:
      return check_weight<Rat>(u, v, w);
    case backend::floating:
      return check_weight<FloatReal>(u, v, w);
    case backend::lc_rational:
      return check_weight<SeriesRat>(u, v, w);
    case backend::lc_float:
      return check_weight<SeriesFloat>(u, v, w);
  }
  fail(errc::internal, "unhandled backend");
}

const json& require_key(const json& obj, const char* key, json::value_t type,
                        const char* type_name) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(errc::syntax_error, std::string("missing key \"") + key + "\"");
  if (it->type() != type) {
    fail(errc::syntax_error, std::string("key \"") + key + "\" must be " + type_name);
  }
  return *it;
}

}  // namespace

GraphDoc parse_graph_doc(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::syntax_error, std::string("graph document: ") + e.what());
  }
  if (!doc.is_object()) fail(errc::syntax_error, "graph document must be a JSON object");

  GraphDoc out;

  const json& field = require_key(doc, "field", json::value_t::string, "a string");
  auto tag = backend_from_name(field.get<std::string>());
  if (!tag) {
    fail(errc::invalid_argument, "unknown field backend \"" + field.get<std::string>() + "\"");
  }
  out.field = *tag;

  if (auto it = doc.find("truncation_order"); it != doc.end() && !it->is_null()) {
    Rat t;
    if (it->is_string()) {
      t = parse_element<Rat>(it->get<std::string>());
    } else if (it->is_number_integer()) {
      t = Rat(static_cast<long>(it->get<long long>()));
    } else {
      fail(errc::syntax_error, "truncation_order must be a rational literal string");
    }
    if (t.sign() <= 0) fail(errc::invalid_argument, "truncation_order must be positive");
    out.truncation_order = t;
  }

  const json& vertices = require_key(doc, "vertices", json::value_t::array, "an array");
  std::set<std::string> seen;
  for (const json& v : vertices) {
    if (!v.is_string()) fail(errc::syntax_error, "vertex labels must be strings");
    std::string label = v.get<std::string>();
    if (label.empty()) fail(errc::invalid_argument, "empty vertex label");
    if (!seen.insert(label).second) {
      fail(errc::invalid_argument, "duplicate vertex label \"" + label + "\"");
    }
    out.vertices.push_back(std::move(label));
  }

  const json& edges = require_key(doc, "edges", json::value_t::array, "an array");
  std::set<std::pair<std::string, std::string>> pairs;
  for (const json& e : edges) {
    if (!e.is_object()) fail(errc::syntax_error, "edges must be objects");
    std::string u = require_key(e, "u", json::value_t::string, "a string").get<std::string>();
    std::string v = require_key(e, "v", json::value_t::string, "a string").get<std::string>();
    std::string w = require_key(e, "w", json::value_t::string, "a string").get<std::string>();
    if (!seen.count(u)) fail(errc::unknown_vertex, "unknown vertex \"" + u + "\"");
    if (!seen.count(v)) fail(errc::unknown_vertex, "unknown vertex \"" + v + "\"");
    if (u == v) fail(errc::self_loop, "self-loop at vertex \"" + u + "\"");
    auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    if (!pairs.insert(key).second) {
      fail(errc::duplicate_edge, "duplicate edge {" + u + ", " + v + "}");
    }
    check_weight_for(out.field, u, v, w);
    out.edges.push_back(GraphDoc::Edge{std::move(u), std::move(v), std::move(w)});
  }

  return out;
}

std::string graph_doc_to_json(const GraphDoc& doc) {
  json j;
  j["field"] = backend_name(doc.field);
  if (doc.truncation_order) j["truncation_order"] = doc.truncation_order->str();
  j["vertices"] = doc.vertices;
  json edges = json::array();
  for (const auto& e : doc.edges) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"w", e.w}});
  }
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

}  // namespace ofc
