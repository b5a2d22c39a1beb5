#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ecoh/linalg.hpp"
#include "ecoh/matrix.hpp"

namespace ecoh::states {

enum class Subsystem { A, B };

// Pure state of a d_a x d_b bipartite system, held as its coefficient
// matrix: entry (i, j) is the amplitude on |i>_a |j>_b. Unit norm.
class PureBipartiteState {
public:
    PureBipartiteState(std::size_t dim_a, std::size_t dim_b, ComplexMatrix coeffs);

    std::size_t dim_a() const noexcept { return dim_a_; }
    std::size_t dim_b() const noexcept { return dim_b_; }
    std::size_t min_dim() const noexcept { return dim_a_ < dim_b_ ? dim_a_ : dim_b_; }
    const ComplexMatrix& coeffs() const noexcept { return coeffs_; }

private:
    std::size_t dim_a_;
    std::size_t dim_b_;
    ComplexMatrix coeffs_;
};

// Hermitian, PSD, unit-trace matrix with its eigendecomposition computed
// at construction. All measures read the cached spectrum.
class DensityOperator {
public:
    explicit DensityOperator(ComplexMatrix matrix, double tol = kDefaultTol);

    std::size_t dim() const noexcept { return matrix_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    const linalg::EigenDecomposition& eig() const noexcept { return eig_; }

    // V diag(sqrt(clip(lambda, 0))) V^dagger, re-Hermitized.
    ComplexMatrix sqrt() const;
    // Tr sqrt(rho) = sum of sqrt of the clipped eigenvalues.
    double trace_sqrt() const;

private:
    ComplexMatrix matrix_;
    linalg::EigenDecomposition eig_;
};

struct SchmidtDecomposition {
    std::vector<double> coefficients;  // sqrt(p_i), descending; values below 1e-12 snap to 0
    ComplexMatrix basis_a;             // columns |a_i>
    ComplexMatrix basis_b;             // columns |b_i>
};

// Validates shape and norm. Non-strict accepts a norm within 1e-6 of 1 and
// renormalizes exactly; strict rejects any deviation beyond the default
// tolerance instead.
PureBipartiteState new_state(std::size_t dim_a, std::size_t dim_b,
                             std::span<const cplx> amplitudes, bool strict = false);

// Partial trace of |psi><psi| over the other subsystem. Both reductions
// carry the same nonzero spectrum.
DensityOperator reduced_density(const PureBipartiteState& psi, Subsystem which);

SchmidtDecomposition schmidt_decompose(const PureBipartiteState& psi);

// Two-qutrit family with amplitudes sqrt(2/3) sin(theta), sqrt(2/3) cos(theta),
// sqrt(1/3) on the diagonal product slots. Maximally entangled at theta = pi/4.
PureBipartiteState make_psi1(double theta);

// Two-qutrit family with amplitudes sqrt(x/3), sqrt(x/3), sqrt(1 - 2x/3).
// Product state at x = 0, maximally entangled at x = 1.
PureBipartiteState make_psi2(double x);

PureBipartiteState maximally_entangled(std::size_t n);
PureBipartiteState product_state(std::size_t dim_a, std::size_t dim_b,
                                 std::size_t i, std::size_t j);
// Haar-uniform unit vector: i.i.d. complex Gaussian amplitudes, normalized.
PureBipartiteState random_state(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed);

}  // namespace ecoh::states
