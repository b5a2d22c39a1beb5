#pragma once

#include <cstdint>
#include <vector>

#include "ecoh/matrix.hpp"

namespace ecoh::linalg {

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // descending
    ComplexMatrix eigenvectors;       // columns, orthonormal, matching order
};

// Cyclic Jacobi eigensolver for Hermitian matrices. Eigenvalues come out
// descending; equal eigenvalues are ordered by the index of the dominant
// component of their eigenvector, so the output is reproducible.
// Throws NotHermitian if the max-abs entry of M - M^dagger exceeds tol,
// NoConvergence if the sweep cap (100 n^2) is exhausted.
EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol = kDefaultTol);

// V sqrt(clip(lambda, 0)) V^dagger. Eigenvalues in [-tol, 0) count as float
// noise and clip to zero; anything below -tol is NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& rho, double tol = kDefaultTol);

struct Svd {
    ComplexMatrix u;                     // rows x r, orthonormal columns
    std::vector<double> singular_values; // length r = min(rows, cols), descending
    ComplexMatrix v;                     // cols x r, orthonormal columns; M = U diag(s) V^dagger
};

// Thin SVD via hermitian_eig of M^dagger M plus column recovery, with
// re-orthonormalization of the recovered columns and deterministic
// completion of null directions.
Svd svd(const ComplexMatrix& m);

// Haar-distributed unitary: QR of a standard complex Gaussian matrix with
// the R-diagonal phase convention fixed (positive real diagonal).
// Deterministic for a fixed seed.
ComplexMatrix haar_random_unitary(std::size_t n, std::uint64_t seed);

// Extends k orthonormal columns (k <= n) to a full n x n unitary by
// scanning standard basis vectors; deterministic.
ComplexMatrix complete_basis(const ComplexMatrix& columns);

}  // namespace ecoh::linalg
