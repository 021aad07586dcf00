#pragma once

#include <complex>
#include <vector>

namespace dfig::detail {

/// Eigenvalues of a dense real n x n matrix stored row-major.
std::vector<std::complex<double>> real_matrix_eigenvalues(
    const std::vector<double>& a, int n);

} // namespace dfig::detail
