#pragma once

#include <string>

#include "graph_doc.hpp"

namespace ofc {

// Figure-1 triangle: vertices x,y,z with b(x,y)=eps^n and unit sides.
GraphDoc generate_triangle(long n);

// Complete graph on 2k vertices, eps^n inside each half, 1 across.
GraphDoc generate_near_bipartite_complete(long k, long n);

// Complete graph on n vertices, all weights 1, rational backend.
GraphDoc generate_complete_unit(long n);

// Dispatch by family name with JSON params, e.g. ("triangle", "{\"n\": 2}").
GraphDoc generate_family(const std::string& family, const std::string& params_json);

}  // namespace ofc
