#pragma once

#include <stdexcept>
#include <string>

namespace ofc {

// Error taxonomy shared by the core, the C API and the CLI. Parse errors keep
// distinct codes so callers can tell malformed input apart from violated
// analysis preconditions.
enum class errc {
  invalid_argument,
  syntax_error,
  duplicate_edge,
  self_loop,
  nonpositive_weight,
  unknown_vertex,
  malformed_weight,
  backend_mismatch,
  division_by_zero,
  sqrt_of_negative,
  not_representable,
  infinite_standard_part,
  isolated_vertex,
  edgeless_graph,
  size_cap_exceeded,
  dimension_mismatch,
  zero_vector,
  no_convergence,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "invalid-argument";
    case errc::syntax_error: return "syntax-error";
    case errc::duplicate_edge: return "duplicate-edge";
    case errc::self_loop: return "self-loop";
    case errc::nonpositive_weight: return "nonpositive-weight";
    case errc::unknown_vertex: return "unknown-vertex";
    case errc::malformed_weight: return "malformed-weight";
    case errc::backend_mismatch: return "backend-mismatch";
    case errc::division_by_zero: return "division-by-zero";
    case errc::sqrt_of_negative: return "sqrt-of-negative";
    case errc::not_representable: return "not-representable";
    case errc::infinite_standard_part: return "infinite-standard-part";
    case errc::isolated_vertex: return "isolated-vertex";
    case errc::edgeless_graph: return "edgeless-graph";
    case errc::size_cap_exceeded: return "size-cap-exceeded";
    case errc::dimension_mismatch: return "dimension-mismatch";
    case errc::zero_vector: return "zero-vector";
    case errc::no_convergence: return "no-convergence";
    case errc::internal: return "internal";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace ofc
