#pragma once

#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "rational.hpp"

namespace ofc {

// Backend-agnostic graph document: the JSON file shape with weights kept as
// expression strings. Typed graphs are built from this by the graph module.
struct GraphDoc {
  struct Edge {
    std::string u;
    std::string v;
    std::string w;
  };

  backend field = backend::rational;
  std::optional<Rat> truncation_order;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
};

// Parses and validates the document structure: JSON shape, known backend
// tag, distinct vertex labels, edges over known vertices, no self-loops, one
// entry per unordered pair. Weight strings are preserved verbatim; their
// syntax and positivity are checked when the typed graph is built.
GraphDoc parse_graph_doc(const std::string& text);

std::string graph_doc_to_json(const GraphDoc& doc);

}  // namespace ofc
