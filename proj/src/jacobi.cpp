#include "jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "error.hpp"

namespace ofc {

std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a,
                                       double threshold) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) fail(errc::dimension_mismatch, "matrix is not square");
  }
  if (n <= 1) {
    return n == 0 ? std::vector<double>{} : std::vector<double>{a[0][0]};
  }
  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::fabs(a[p][q]));
    }
    if (off <= threshold) {
      std::vector<double> ev(n);
      for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
      std::sort(ev.begin(), ev.end());
      return ev;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a[p][q];
        if (std::fabs(apq) <= threshold * 1e-3) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  fail(errc::no_convergence, "jacobi sweeps exceeded without reaching threshold");
}

}  // namespace ofc
