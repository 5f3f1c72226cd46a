#pragma once
#include <vector>

#include "drac/matrix.hpp"

namespace drac {

struct EigResult {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // orthonormal columns, vectors.col(k) <-> values[k]
};

// Hermitian eigendecomposition by cyclic Jacobi rotations.
// Throws NotHermitian if ||M - M^dag||_max > herm_tol, NoConvergence after
// max_sweeps sweeps.
EigResult herm_eig(const ComplexMatrix& m, double herm_tol = 1e-9, int max_sweeps = 10000);

Ket eig_column(const EigResult& e, std::size_t k);

}  // namespace drac
