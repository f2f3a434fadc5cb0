#pragma once

#include <cstddef>
#include <vector>

#include "rigidity/complex_matrix.hpp"
#include "rigidity/config.hpp"

namespace rigidity {

/// A linearly independent family of operators spanning a subspace of
/// End(C^ambient_dim). rank == basis.size() and the basis is numerically
/// independent at the tolerance it was built with.
struct OperatorSpan {
    std::size_t ambient_dim = 0;
    std::vector<ComplexMatrix> basis;
    std::size_t rank = 0;
};

/// Numerical rank of the span of the given operators: the matrices are
/// flattened to rows of a stack and the rank is the number of singular
/// values above tol_rank times the largest one. Computed as a QR of the
/// transposed stack followed by an SVD of the triangular factor, which gives
/// the exact singular values of the stack without forming a Gram matrix.
/// An empty list has rank 0. All inputs must share one dimension.
std::size_t span_rank(const std::vector<ComplexMatrix>& mats, double tol_rank);

/// Singular values of the flattened stack, descending. Empty input -> {}.
std::vector<double> stack_singular_values(const std::vector<ComplexMatrix>& mats);

/// Eigenvalues of a Hermitian matrix, ascending. The input must satisfy
/// ||a - a^dagger||_F <= tol_herm * ||a||_F; otherwise std::domain_error is
/// thrown carrying the measured asymmetry.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, double tol_herm = Tolerances{}.tol_herm);

/// True when the numerical rank of {columns of a} equals dim at tol_rank.
bool is_invertible(const ComplexMatrix& a, double tol_rank = Tolerances{}.tol_rank);

}  // namespace rigidity
