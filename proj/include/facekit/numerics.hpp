#pragma once

#include "facekit/types.hpp"

namespace facekit {

/// Full spectrum of a symmetric matrix. Eigenvalues are sorted descending;
/// column j of `eigenvectors` pairs with `eigenvalues[j]`. Columns are
/// orthonormal and sign-fixed: the largest-magnitude component of each
/// eigenvector is positive.
struct EigenDecomposition {
    Vector eigenvalues;
    Matrix eigenvectors;
};

/// Returns AᵀA with symmetry enforced by averaging (G + Gᵀ)/2.
Matrix gram(const Matrix& a);

/// Diagonalizes a symmetric matrix with cyclic Jacobi rotations.
/// Sweeps run in fixed (row, column) order until the off-diagonal Frobenius
/// norm falls below 1e-12 · ‖S‖_F or 100 sweeps elapse, so identical input
/// always produces identical output. Ties in the sorted eigenvalues keep
/// their pre-sort order. Throws ContractError if `s` is not square or not
/// symmetric within 1e-9 relative tolerance.
EigenDecomposition sym_eigen(const Matrix& s);

/// Standard matrix-vector product with an explicit dimension check.
Vector matvec(const Matrix& a, const Vector& x);

}  // namespace facekit
