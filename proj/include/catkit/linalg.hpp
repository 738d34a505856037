#pragma once

#include "catkit/complex_matrix.hpp"

#include <vector>

namespace catkit {

// Rank of a complex matrix via Gaussian elimination with partial pivoting;
// pivots with modulus <= tol count as zero.
int rank(const ComplexMatrix& m, double tol);

inline int nullity(const ComplexMatrix& m, double tol) { return m.cols() - rank(m, tol); }

// Determinant of a square matrix via LU elimination.
Complex determinant(const ComplexMatrix& m);

// Inverse of a square matrix via Gauss-Jordan; throws std::invalid_argument if
// a pivot falls below tol (singular within tolerance).
ComplexMatrix inverse(const ComplexMatrix& m, double tol);

// Eigenvalues of a Hermitian matrix via the cyclic complex Jacobi rotation
// method, ascending. Input is symmetrized first; intended for the small Gram
// matrices used here.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Singular values, descending, computed from the eigenvalues of the smaller
// Gram matrix.
std::vector<double> singular_values(const ComplexMatrix& m);

} // namespace catkit
