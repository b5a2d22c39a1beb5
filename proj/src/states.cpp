#include "ecoh/states.hpp"

#include <cmath>
#include <utility>

#include "ecoh/errors.hpp"
#include "ecoh/rng.hpp"

namespace ecoh::states {
namespace {

double vector_norm(const ComplexMatrix& coeffs) {
    double sum = 0.0;
    for (const cplx& v : coeffs.entries()) sum += std::norm(v);
    return std::sqrt(sum);
}

constexpr double kSchmidtSnap = 1e-12;

// Eigenvalues of a rank-deficient density come out of the eigensolver as
// noise of order 1e-16 to 1e-14; left alone they would contribute sqrt(noise)
// ~ 1e-8 to Tr sqrt(rho). Anything below this absolute floor is treated as
// an exact zero before taking square roots.
constexpr double kEigenZero = 1e-13;

}  // namespace

PureBipartiteState::PureBipartiteState(std::size_t dim_a, std::size_t dim_b, ComplexMatrix coeffs)
    : dim_a_(dim_a), dim_b_(dim_b), coeffs_(std::move(coeffs)) {
    if (dim_a_ == 0 || dim_b_ == 0)
        throw Error(ErrorCode::BadShape, "subsystem dimensions must be positive");
    if (coeffs_.rows() != dim_a_ || coeffs_.cols() != dim_b_)
        throw Error(ErrorCode::BadShape, "coefficient matrix shape does not match dims");
    if (!coeffs_.all_finite())
        throw Error(ErrorCode::BadInput, "amplitudes must be finite");
    if (std::abs(vector_norm(coeffs_) - 1.0) > 1e-8)
        throw Error(ErrorCode::NotNormalized, "state vector is not unit norm");
}

DensityOperator::DensityOperator(ComplexMatrix matrix, double tol)
    : matrix_(std::move(matrix)), eig_(linalg::hermitian_eig(matrix_, tol)) {
    if (std::abs(matrix_.trace() - cplx(1.0)) > tol)
        throw Error(ErrorCode::BadInput, "density matrix trace is not 1");
    for (const double lambda : eig_.eigenvalues) {
        if (lambda < -tol)
            throw Error(ErrorCode::NotPSD, "density matrix has a negative eigenvalue");
    }
}

ComplexMatrix DensityOperator::sqrt() const {
    const std::size_t n = dim();
    const ComplexMatrix& v = eig_.eigenvectors;
    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i)
        roots[i] = eig_.eigenvalues[i] > kEigenZero ? std::sqrt(eig_.eigenvalues[i]) : 0.0;

    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            cplx sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) sum += roots[k] * v(i, k) * std::conj(v(j, k));
            if (i == j) {
                out(i, i) = sum.real();
            } else {
                out(i, j) = sum;
                out(j, i) = std::conj(sum);
            }
        }
    }
    return out;
}

double DensityOperator::trace_sqrt() const {
    double sum = 0.0;
    for (const double lambda : eig_.eigenvalues)
        if (lambda > kEigenZero) sum += std::sqrt(lambda);
    return sum;
}

PureBipartiteState new_state(std::size_t dim_a, std::size_t dim_b,
                             std::span<const cplx> amplitudes, bool strict) {
    if (dim_a == 0 || dim_b == 0)
        throw Error(ErrorCode::BadShape, "subsystem dimensions must be positive");
    if (amplitudes.size() != dim_a * dim_b)
        throw Error(ErrorCode::BadShape, "amplitude count does not match dims");

    ComplexMatrix coeffs(dim_a, dim_b, std::vector<cplx>(amplitudes.begin(), amplitudes.end()));
    if (!coeffs.all_finite())
        throw Error(ErrorCode::BadInput, "amplitudes must be finite");

    const double nrm = vector_norm(coeffs);
    const double allowed = strict ? kDefaultTol : 1e-6;
    if (std::abs(nrm - 1.0) > allowed)
        throw Error(ErrorCode::NotNormalized, "state vector norm is off by more than tolerance");
    coeffs *= cplx(1.0 / nrm);
    return PureBipartiteState(dim_a, dim_b, std::move(coeffs));
}

DensityOperator reduced_density(const PureBipartiteState& psi, Subsystem which) {
    const ComplexMatrix& c = psi.coeffs();
    const std::size_t da = psi.dim_a();
    const std::size_t db = psi.dim_b();

    if (which == Subsystem::A) {
        // rho_A = C C^dagger
        ComplexMatrix rho(da, da);
        for (std::size_t i = 0; i < da; ++i) {
            for (std::size_t k = i; k < da; ++k) {
                cplx sum = 0.0;
                for (std::size_t j = 0; j < db; ++j) sum += c(i, j) * std::conj(c(k, j));
                if (i == k) {
                    rho(i, i) = sum.real();
                } else {
                    rho(i, k) = sum;
                    rho(k, i) = std::conj(sum);
                }
            }
        }
        return DensityOperator(std::move(rho));
    }

    // rho_B(j, j') = sum_i C(i, j) conj(C(i, j')), the conjugate of C^dagger C.
    ComplexMatrix rho(db, db);
    for (std::size_t j = 0; j < db; ++j) {
        for (std::size_t k = j; k < db; ++k) {
            cplx sum = 0.0;
            for (std::size_t i = 0; i < da; ++i) sum += c(i, j) * std::conj(c(i, k));
            if (j == k) {
                rho(j, j) = sum.real();
            } else {
                rho(j, k) = sum;
                rho(k, j) = std::conj(sum);
            }
        }
    }
    return DensityOperator(std::move(rho));
}

SchmidtDecomposition schmidt_decompose(const PureBipartiteState& psi) {
    const linalg::Svd sd = linalg::svd(psi.coeffs());

    SchmidtDecomposition out;
    out.coefficients = sd.singular_values;
    for (double& c : out.coefficients)
        if (c < kSchmidtSnap) c = 0.0;
    out.basis_a = sd.u;
    // C = U diag(sigma) V^dagger means the b-side Schmidt vectors are the
    // conjugated columns of V.
    out.basis_b = sd.v.conjugate();
    return out;
}

PureBipartiteState make_psi1(double theta) {
    if (!(theta >= 0.0 && theta <= 1.5707963267948966 + 1e-12))
        throw Error(ErrorCode::OutOfRange, "theta must lie in [0, pi/2]");
    const double a = std::sqrt(2.0 / 3.0);
    ComplexMatrix c(3, 3);
    c(0, 0) = a * std::sin(theta);
    c(1, 1) = a * std::cos(theta);
    c(2, 2) = std::sqrt(1.0 / 3.0);
    return PureBipartiteState(3, 3, std::move(c));
}

PureBipartiteState make_psi2(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw Error(ErrorCode::OutOfRange, "x must lie in [0, 1]");
    ComplexMatrix c(3, 3);
    c(0, 0) = std::sqrt(x / 3.0);
    c(1, 1) = std::sqrt(x / 3.0);
    c(2, 2) = std::sqrt(1.0 - 2.0 * x / 3.0);
    return PureBipartiteState(3, 3, std::move(c));
}

PureBipartiteState maximally_entangled(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::BadShape, "dimension must be positive");
    ComplexMatrix c(n, n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) c(i, i) = amp;
    return PureBipartiteState(n, n, std::move(c));
}

PureBipartiteState product_state(std::size_t dim_a, std::size_t dim_b,
                                 std::size_t i, std::size_t j) {
    if (dim_a == 0 || dim_b == 0 || i >= dim_a || j >= dim_b)
        throw Error(ErrorCode::BadShape, "product state index out of range");
    ComplexMatrix c(dim_a, dim_b);
    c(i, j) = 1.0;
    return PureBipartiteState(dim_a, dim_b, std::move(c));
}

PureBipartiteState random_state(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
    if (dim_a == 0 || dim_b == 0)
        throw Error(ErrorCode::BadShape, "subsystem dimensions must be positive");
    Rng rng(seed);
    ComplexMatrix c(dim_a, dim_b);
    for (std::size_t i = 0; i < dim_a; ++i)
        for (std::size_t j = 0; j < dim_b; ++j)
            c(i, j) = cplx(rng.gaussian(), rng.gaussian());
    const double nrm = vector_norm(c);
    c *= cplx(1.0 / nrm);
    return PureBipartiteState(dim_a, dim_b, std::move(c));
}

}  // namespace ecoh::states
