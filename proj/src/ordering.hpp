#pragma once

namespace ofc {

// Outcome of comparing two field elements. `indistinguishable` arises only
// for truncated series: every computed term of the difference vanishes, but
// the difference could still hide beyond the truncation order. It is never
// coerced to `equal`.
enum class cmp { less, equal, greater, indistinguishable };

inline bool is_definite(cmp c) { return c != cmp::indistinguishable; }

inline cmp flipped(cmp c) {
  switch (c) {
    case cmp::less: return cmp::greater;
    case cmp::greater: return cmp::less;
    default: return c;
  }
}

inline const char* cmp_name(cmp c) {
  switch (c) {
    case cmp::less: return "less";
    case cmp::equal: return "equal";
    case cmp::greater: return "greater";
    case cmp::indistinguishable: return "indistinguishable";
  }
  return "unknown";
}

}  // namespace ofc
