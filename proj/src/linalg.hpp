#pragma once

#include <vector>

#include "support.hpp"

namespace holopack {

using CMatrix = std::vector<std::vector<cplx>>;

// Gauss-Jordan inverse with partial pivoting. Regularity test is scale
// invariant: |det A| > 1e-12 * (||A||_F / sqrt(n))^n, else SingularMatrix.
CMatrix invert_matrix(const CMatrix& a);

cplx matrix_det(const CMatrix& a);

std::vector<cplx> matrix_apply(const CMatrix& a, const std::vector<cplx>& v);

} // namespace holopack
