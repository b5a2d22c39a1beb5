#include "ecoh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ecoh/errors.hpp"
#include "ecoh/rng.hpp"

namespace ecoh::linalg {
namespace {

cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
    cplx sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
    return sum;
}

double norm(std::span<const cplx> a) {
    double sum = 0.0;
    for (const cplx& v : a) sum += std::norm(v);
    return std::sqrt(sum);
}

// Index of the largest-magnitude component (first on ties).
std::size_t dominant_index(std::span<const cplx> a) {
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double mag = std::abs(a[i]);
        if (mag > best_mag) {
            best_mag = mag;
            best = i;
        }
    }
    return best;
}

// Two MGS passes of `col` against the first `count` columns of basis.
void orthogonalize(std::vector<cplx>& col, const ComplexMatrix& basis, std::size_t count) {
    const std::size_t n = col.size();
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < count; ++j) {
            cplx overlap = 0.0;
            for (std::size_t i = 0; i < n; ++i) overlap += std::conj(basis(i, j)) * col[i];
            for (std::size_t i = 0; i < n; ++i) col[i] -= overlap * basis(i, j);
        }
    }
}

// First standard basis vector with a large component outside the span of the
// accepted columns, orthonormalized against them.
std::vector<cplx> completion_column(const ComplexMatrix& basis, std::size_t count) {
    const std::size_t n = basis.rows();
    for (std::size_t cand = 0; cand < n; ++cand) {
        std::vector<cplx> col(n, 0.0);
        col[cand] = 1.0;
        orthogonalize(col, basis, count);
        const double remaining = norm(col);
        if (remaining > 0.5) {
            for (cplx& v : col) v /= remaining;
            return col;
        }
    }
    throw Error(ErrorCode::NoConvergence, "could not complete orthonormal basis");
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tol) {
    if (!m.is_square() || m.rows() == 0)
        throw Error(ErrorCode::BadShape, "eigendecomposition needs a square nonempty matrix");
    if (!m.all_finite())
        throw Error(ErrorCode::BadInput, "matrix has non-finite entries");
    if (m.hermiticity_error() > tol)
        throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian within tolerance");

    const std::size_t n = m.rows();

    // Iterate on the exactly Hermitized copy.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = 0.5 * (m(i, i) + std::conj(m(i, i)));
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = a.max_abs();
    if (n > 1 && scale > 0.0) {
        const double stop = 1e-14 * scale;
        const std::size_t max_sweeps = 100 * n * n;
        std::size_t sweep = 0;
        for (;; ++sweep) {
            double off = 0.0;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
            if (off <= stop) break;
            if (sweep >= max_sweeps)
                throw Error(ErrorCode::NoConvergence, "Jacobi sweep limit exceeded");

            for (std::size_t p = 0; p < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const cplx apq = a(p, q);
                    const double mag = std::abs(apq);
                    if (mag <= stop) continue;

                    // Phase factors out of the pivot; the rest is the real
                    // symmetric rotation with cot(2 theta) = tau.
                    const cplx phase = apq / mag;
                    const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                    const double t =
                        (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const cplx phase_conj = std::conj(phase);

                    for (std::size_t i = 0; i < n; ++i) {
                        const cplx aip = a(i, p);
                        const cplx aiq = a(i, q);
                        a(i, p) = c * aip - s * phase_conj * aiq;
                        a(i, q) = s * aip + c * phase_conj * aiq;
                    }
                    for (std::size_t j = 0; j < n; ++j) {
                        const cplx apj = a(p, j);
                        const cplx aqj = a(q, j);
                        a(p, j) = c * apj - s * phase * aqj;
                        a(q, j) = s * apj + c * phase * aqj;
                    }
                    for (std::size_t i = 0; i < n; ++i) {
                        const cplx vip = v(i, p);
                        const cplx viq = v(i, q);
                        v(i, p) = c * vip - s * phase_conj * viq;
                        v(i, q) = s * vip + c * phase_conj * viq;
                    }
                }
            }
        }
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();

    // Fix each eigenvector's phase (dominant component real positive) so the
    // output is a pure function of the input.
    std::vector<std::size_t> dominant(n);
    for (std::size_t j = 0; j < n; ++j) {
        auto col = v.column(j);
        const std::size_t k = dominant_index(col);
        dominant[j] = k;
        const double mag = std::abs(col[k]);
        if (mag > 0.0) {
            const cplx correction = std::conj(col[k]) / mag;
            for (cplx& entry : col) entry *= correction;
            v.set_column(j, col);
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (values[x] != values[y]) return values[x] > values[y];
        return dominant[x] < dominant[y];
    });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = values[order[j]];
        const auto col = v.column(order[j]);
        out.eigenvectors.set_column(j, col);
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& rho, double tol) {
    const EigenDecomposition eig = hermitian_eig(rho, tol);
    const std::size_t n = rho.rows();

    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lambda = eig.eigenvalues[i];
        if (lambda < -tol)
            throw Error(ErrorCode::NotPSD, "matrix has an eigenvalue below -tol");
        roots[i] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
    }

    // Assemble the upper triangle and mirror so the result is exactly
    // Hermitian.
    const ComplexMatrix& v = eig.eigenvectors;
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

Svd svd(const ComplexMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0)
        throw Error(ErrorCode::BadShape, "svd of an empty matrix");
    if (!m.all_finite())
        throw Error(ErrorCode::BadInput, "matrix has non-finite entries");

    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t r = std::min(rows, cols);

    const ComplexMatrix h = m.adjoint() * m;
    const double eig_tol = std::max(kDefaultTol, 1e-12 * std::max(1.0, h.max_abs()));
    const EigenDecomposition eig = hermitian_eig(h, eig_tol);

    // sigma_i = ||M v_i|| rather than sqrt(lambda_i): the direct norm keeps
    // full accuracy for near-null modes.
    Svd out;
    out.singular_values.resize(r);
    out.u = ComplexMatrix(rows, r);
    out.v = ComplexMatrix(cols, r);

    std::vector<std::vector<cplx>> images(r);
    double sigma_max = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
        const auto vi = eig.eigenvectors.column(i);
        out.v.set_column(i, vi);
        std::vector<cplx> w(rows, 0.0);
        for (std::size_t row = 0; row < rows; ++row) {
            cplx sum = 0.0;
            for (std::size_t col = 0; col < cols; ++col) sum += m(row, col) * vi[col];
            w[row] = sum;
        }
        images[i] = std::move(w);
        out.singular_values[i] = norm(images[i]);
        sigma_max = std::max(sigma_max, out.singular_values[i]);
    }

    // Unfilled slots stay zero, and zero columns are no-ops under MGS, so
    // every pass can simply orthogonalize against all r slots.
    const double cut = 1e-13 * sigma_max;
    std::vector<std::size_t> null_modes;
    for (std::size_t i = 0; i < r; ++i) {
        if (out.singular_values[i] <= cut) {
            out.singular_values[i] = 0.0;
            null_modes.push_back(i);
            continue;
        }
        std::vector<cplx> col = images[i];
        for (cplx& entry : col) entry /= out.singular_values[i];
        orthogonalize(col, out.u, i);
        const double remaining = norm(col);
        if (remaining < 0.5) {
            // Collapsed under orthogonalization; treat as null.
            out.singular_values[i] = 0.0;
            null_modes.push_back(i);
            continue;
        }
        for (cplx& entry : col) entry /= remaining;
        out.u.set_column(i, col);
    }

    for (const std::size_t i : null_modes) {
        const auto col = completion_column(out.u, r);
        out.u.set_column(i, col);
    }
    return out;
}

ComplexMatrix haar_random_unitary(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorCode::BadShape, "unitary dimension must be positive");
    Rng rng(seed);
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double re = rng.gaussian();
            const double im = rng.gaussian();
            g(i, j) = cplx(re, im) * 0.7071067811865475244;
        }
    }

    // Gram-Schmidt QR gives the R-diagonal-positive factorization directly,
    // which is the convention that makes Q Haar-distributed.
    ComplexMatrix q(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto col = g.column(j);
        orthogonalize(col, q, j);
        const double remaining = norm(col);
        if (remaining < 1e-12) {
            const auto fallback = completion_column(q, j);
            q.set_column(j, fallback);
            continue;
        }
        for (cplx& entry : col) entry /= remaining;
        q.set_column(j, col);
    }
    return q;
}

ComplexMatrix complete_basis(const ComplexMatrix& columns) {
    const std::size_t n = columns.rows();
    const std::size_t k = columns.cols();
    if (k > n) throw Error(ErrorCode::BadShape, "more columns than rows");

    ComplexMatrix out(n, n);
    for (std::size_t j = 0; j < k; ++j) {
        auto col = columns.column(j);
        orthogonalize(col, out, j);
        const double remaining = norm(col);
        if (remaining < 0.5)
            throw Error(ErrorCode::BadBasis, "input columns are not orthonormal");
        for (cplx& entry : col) entry /= remaining;
        out.set_column(j, col);
    }
    for (std::size_t j = k; j < n; ++j) {
        const auto col = completion_column(out, j);
        out.set_column(j, col);
    }
    return out;
}

}  // namespace ecoh::linalg
