#include "cheeger.hpp"

namespace ofc {

const char* verdict_name(verdict v) {
  switch (v) {
    case verdict::holds: return "holds";
    case verdict::fails: return "fails";
    case verdict::indistinguishable: return "indistinguishable";
  }
  return "unknown";
}

Rat theorem1_bound(int n) {
  if (n < 2) fail(errc::invalid_argument, "the parity bound needs at least two vertices");
  if (n % 2 == 0) return Rat(n, 2 * (n - 1));
  return Rat(n + 1, 2 * n);
}

}  // namespace ofc
