#pragma once

#include <vector>

namespace ofc {

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
// returned ascending. Stops once every off-diagonal entry is below the
// threshold; throws no_convergence if that never happens.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a,
                                       double threshold = 1e-12);

}  // namespace ofc
