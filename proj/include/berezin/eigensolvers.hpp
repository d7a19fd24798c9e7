#pragma once

#include "berezin/dense_matrix.hpp"

#include <vector>

namespace berezin {

// All eigenvalues of a real symmetric matrix, sorted descending.
// Cyclic Jacobi sweeps; the input must be real and symmetric entrywise
// within tol::hermitian_defect (scaled), otherwise std::invalid_argument.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& m);

// Eigenvalue multiset (with algebraic multiplicity) of a general complex
// matrix of dimension <= 32, via Hessenberg reduction and shifted QR.
std::vector<cdouble> general_eigenvalues(const DenseMatrix& m);

// Singular values, descending, via the hermitian eigenproblem for A^H A.
std::vector<double> singular_values(const DenseMatrix& m);

}
