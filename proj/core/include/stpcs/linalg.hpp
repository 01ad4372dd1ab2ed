#pragma once

#include <span>
#include <vector>

#include "stpcs/matrix.hpp"

namespace stpcs::linalg {

/// Singular values in descending order.
std::vector<double> singular_values(const DenseMatrix& a);

/// Number of singular values at or above rel_tol·σ_max. A zero matrix has
/// rank 0.
std::size_t rank(const DenseMatrix& a, double rel_tol = 1e-9);

/// Minimum-norm least-squares solution of a·x ≈ b.
std::vector<double> least_squares(const DenseMatrix& a, std::span<const double> b);

/// Eigenvalues of a symmetric matrix, ascending.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& a);

}  // namespace stpcs::linalg
