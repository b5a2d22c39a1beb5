#include "ecoh/measures.hpp"

#include <cmath>

#include "ecoh/errors.hpp"
#include "ecoh/linalg.hpp"

namespace ecoh::measures {
namespace {

// Eigenvalue noise floor: spectrum values in (-1e-10, 0) count as 0.
constexpr double kClipTol = 1e-10;

// Fixed rotation seed so full_report's rotated-basis residuals are a pure
// function of the state.
constexpr std::uint64_t kReportRotationSeed = 20260825u;

double trace_product_real(const ComplexMatrix& x, const ComplexMatrix& y) {
    cplx sum = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) sum += x(i, j) * y(j, i);
    return sum.real();
}

double column_expectation(const ComplexMatrix& m, const ComplexMatrix& basis, std::size_t k) {
    cplx sum = 0.0;
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        cplx row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += m(i, j) * basis(j, k);
        sum += std::conj(basis(i, k)) * row;
    }
    return sum.real();
}

void check_observable_basis(const ObservableBasis& basis, std::size_t n) {
    if (basis.operators.size() != n * n)
        throw Error(ErrorCode::BadBasis, "observable basis must have n^2 operators");
    for (const ComplexMatrix& op : basis.operators) {
        if (!op.is_square() || op.rows() != n)
            throw Error(ErrorCode::BadBasis, "observable dimension mismatch");
        if (op.hermiticity_error() > 1e-8)
            throw Error(ErrorCode::BadBasis, "observable is not Hermitian");
    }
    for (std::size_t i = 0; i < basis.operators.size(); ++i) {
        for (std::size_t j = i; j < basis.operators.size(); ++j) {
            const double inner = trace_product_real(basis.operators[i], basis.operators[j]);
            const double target = i == j ? 1.0 : 0.0;
            if (std::abs(inner - target) > 1e-9)
                throw Error(ErrorCode::BadBasis, "observable basis is not orthonormal");
        }
    }
}

}  // namespace

double ec_from_schmidt(std::span<const double> p, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::BadDistribution, "n must be positive");
    if (p.size() > n)
        throw Error(ErrorCode::BadDistribution, "distribution longer than dimension");
    double sum = 0.0;
    double root_sum = 0.0;
    for (double value : p) {
        if (value < -kClipTol)
            throw Error(ErrorCode::BadDistribution, "negative probability");
        if (value < 0.0) value = 0.0;
        sum += value;
        root_sum += std::sqrt(value);
    }
    if (std::abs(sum - 1.0) > 1e-8)
        throw Error(ErrorCode::BadDistribution, "probabilities do not sum to 1");
    if (n == 1) return 0.0;
    return std::max(0.0, (root_sum * root_sum - 1.0) / static_cast<double>(n - 1));
}

double ec_from_density(const states::DensityOperator& rho, std::size_t n_override) {
    const std::size_t n = n_override == 0 ? rho.dim() : n_override;
    if (n == 1) return 0.0;
    const double t = rho.trace_sqrt();
    return std::max(0.0, (t * t - 1.0) / static_cast<double>(n - 1));
}

double ec_from_sqrt_matrix(const ComplexMatrix& sqrt_rho, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::BadInput, "n must be positive");
    if (!sqrt_rho.is_square())
        throw Error(ErrorCode::BadInput, "sqrt matrix must be square");
    if (sqrt_rho.hermiticity_error() > 1e-8)
        throw Error(ErrorCode::BadInput, "sqrt matrix must be Hermitian");

    const std::size_t d = sqrt_rho.rows();
    double square_trace = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) square_trace += std::norm(sqrt_rho(i, j));
    if (std::abs(square_trace - 1.0) > 1e-8)
        throw Error(ErrorCode::BadInput, "sqrt matrix squared must have unit trace");

    if (n == 1) return 0.0;
    double sum = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            if (j == k) continue;
            sum += sqrt_rho(j, j).real() * sqrt_rho(k, k).real() - std::norm(sqrt_rho(j, k));
        }
    }
    return std::max(0.0, sum / static_cast<double>(n - 1));
}

double i_concurrence_sq(const states::DensityOperator& rho) {
    double purity = 0.0;
    for (const cplx& v : rho.matrix().entries()) purity += std::norm(v);
    return std::max(0.0, 2.0 * (1.0 - purity));
}

double i_concurrence_sq_offdiagonal(const ComplexMatrix& rho_matrix) {
    if (!rho_matrix.is_square())
        throw Error(ErrorCode::BadShape, "density matrix must be square");
    if (rho_matrix.hermiticity_error() > 1e-8)
        throw Error(ErrorCode::NotHermitian, "density matrix must be Hermitian");
    const std::size_t d = rho_matrix.rows();
    double sum = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            if (j == k) continue;
            sum += rho_matrix(j, j).real() * rho_matrix(k, k).real() - std::norm(rho_matrix(j, k));
        }
    }
    return 2.0 * sum;
}

double entropy_of_entanglement(const states::DensityOperator& rho, std::size_t n,
                               bool normalized) {
    double entropy = 0.0;
    for (const double lambda : rho.eig().eigenvalues)
        if (lambda > 0.0) entropy -= lambda * std::log(lambda);
    entropy = std::max(0.0, entropy);
    if (!normalized) return entropy;
    if (n <= 1) return 0.0;
    return entropy / std::log(static_cast<double>(n));
}

double unified_entropy(const states::DensityOperator& rho, double r, double s) {
    if (!(r > 0.0) || r == 1.0 || s == 0.0)
        throw Error(ErrorCode::BadParameters, "require r > 0, r != 1, s != 0");
    double power_trace = 0.0;
    for (const double lambda : rho.eig().eigenvalues)
        if (lambda > 0.0) power_trace += std::pow(lambda, r);
    return (std::pow(power_trace, s) - 1.0) / ((1.0 - r) * s);
}

double skew_information(const states::DensityOperator& rho, const ComplexMatrix& a) {
    if (!a.is_square() || a.rows() != rho.dim())
        throw Error(ErrorCode::DimensionMismatch, "observable dimension mismatch");
    if (a.hermiticity_error() > 1e-10)
        throw Error(ErrorCode::NotHermitian, "observable must be Hermitian");

    const ComplexMatrix root = rho.sqrt();
    const ComplexMatrix rho_a = rho.matrix() * a;
    const ComplexMatrix root_a = root * a;
    double value = trace_product_real(rho_a, a) - trace_product_real(root_a, root_a);
    if (value < 0.0 && value >= -kClipTol) value = 0.0;
    return value;
}

double skew_coherence(const states::DensityOperator& rho, const ComplexMatrix& basis) {
    if (!basis.is_square() || basis.rows() != rho.dim())
        throw Error(ErrorCode::DimensionMismatch, "basis dimension mismatch");
    if (basis.unitarity_error() > 1e-8)
        throw Error(ErrorCode::NotUnitary, "basis matrix must be unitary");

    const ComplexMatrix root = rho.sqrt();
    double total = 0.0;
    for (std::size_t k = 0; k < rho.dim(); ++k) {
        const double pk = column_expectation(rho.matrix(), basis, k);
        const double sk = column_expectation(root, basis, k);
        total += pk - sk * sk;
    }
    if (total < 0.0 && total >= -kClipTol) total = 0.0;
    return total;
}

double max_skew_coherence_analytic(const states::DensityOperator& rho) {
    const double t = rho.trace_sqrt();
    return std::max(0.0, 1.0 - t * t / static_cast<double>(rho.dim()));
}

double quantum_uncertainty(const states::DensityOperator& rho) {
    const double t = rho.trace_sqrt();
    return std::max(0.0, static_cast<double>(rho.dim()) - t * t);
}

double quantum_uncertainty(const states::DensityOperator& rho, const ObservableBasis& basis) {
    const std::size_t n = rho.dim();
    check_observable_basis(basis, n);

    const ComplexMatrix root = rho.sqrt();
    double total = 0.0;
    for (const ComplexMatrix& x : basis.operators) {
        const ComplexMatrix rho_x = rho.matrix() * x;
        const ComplexMatrix root_x = root * x;
        total += trace_product_real(rho_x, x) - trace_product_real(root_x, root_x);
    }
    return total;
}

ObservableBasis standard_observable_basis(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::BadShape, "dimension must be positive");
    ObservableBasis basis;
    basis.operators.reserve(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        ComplexMatrix d(n, n);
        d(k, k) = 1.0;
        basis.operators.push_back(std::move(d));
    }
    const double inv_root2 = 0.7071067811865475244;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            ComplexMatrix sym(n, n);
            sym(j, k) = inv_root2;
            sym(k, j) = inv_root2;
            basis.operators.push_back(std::move(sym));
            ComplexMatrix asym(n, n);
            asym(j, k) = cplx(0.0, -inv_root2);
            asym(k, j) = cplx(0.0, inv_root2);
            basis.operators.push_back(std::move(asym));
        }
    }
    return basis;
}

double joint_basis_coherence(const states::PureBipartiteState& psi,
                             const ComplexMatrix& basis_a, const ComplexMatrix& basis_b) {
    if (!basis_a.is_square() || basis_a.rows() != psi.dim_a() ||
        !basis_b.is_square() || basis_b.rows() != psi.dim_b())
        throw Error(ErrorCode::DimensionMismatch, "local basis dimension mismatch");
    if (basis_a.unitarity_error() > 1e-8 || basis_b.unitarity_error() > 1e-8)
        throw Error(ErrorCode::NotUnitary, "local bases must be unitary");

    // Amplitudes in the product basis: <alpha_i beta_j|psi> = (A^dag C B*)_ij.
    const ComplexMatrix rotated = basis_a.adjoint() * psi.coeffs() * basis_b.conjugate();
    double abs_sum = 0.0;
    double sq_sum = 0.0;
    for (const cplx& v : rotated.entries()) {
        const double mag = std::abs(v);
        abs_sum += mag;
        sq_sum += mag * mag;
    }
    return std::max(0.0, abs_sum * abs_sum - sq_sum);
}

MeasureReport full_report(const states::PureBipartiteState& psi) {
    const std::size_t n = psi.min_dim();
    const states::Subsystem side =
        psi.dim_a() <= psi.dim_b() ? states::Subsystem::A : states::Subsystem::B;
    const states::DensityOperator rho = states::reduced_density(psi, side);

    const states::SchmidtDecomposition schmidt = states::schmidt_decompose(psi);
    std::vector<double> p(schmidt.coefficients.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        p[i] = schmidt.coefficients[i] * schmidt.coefficients[i];

    MeasureReport report;
    report.n = n;
    report.ec = ec_from_density(rho);
    report.i_concurrence_sq = i_concurrence_sq(rho);
    report.entropy = entropy_of_entanglement(rho, n, false);
    report.entropy_norm = entropy_of_entanglement(rho, n, true);
    report.quantum_uncertainty = quantum_uncertainty(rho);
    report.max_skew_coherence = max_skew_coherence_analytic(rho);
    if (n > 1) {
        const double max_iconc = std::sqrt(2.0 * static_cast<double>(n - 1) / n);
        report.i_concurrence_norm = std::sqrt(report.i_concurrence_sq) / max_iconc;
    }

    const double ec_schmidt = ec_from_schmidt(p, n);
    report.identity_residuals.emplace_back("ec_schmidt_vs_density",
                                           std::abs(ec_schmidt - report.ec));

    const ComplexMatrix u = linalg::haar_random_unitary(n, kReportRotationSeed);
    const ComplexMatrix rotated_root = u.adjoint() * rho.sqrt() * u;
    const double ec_rotated = ec_from_sqrt_matrix(rotated_root, n);
    report.identity_residuals.emplace_back("ec_sqrt_form_rotated",
                                           std::abs(report.ec - ec_rotated));

    const double unified = unified_entropy(rho, 0.5, 2.0);
    report.identity_residuals.emplace_back(
        "unified_entropy_relation",
        std::abs(static_cast<double>(n - 1) * report.ec - unified));

    if (n > 1) {
        report.identity_residuals.emplace_back(
            "quantum_uncertainty_relation",
            std::abs(report.ec - (1.0 - report.quantum_uncertainty / static_cast<double>(n - 1))));
        report.identity_residuals.emplace_back(
            "skew_max_relation",
            std::abs(report.ec - (1.0 - static_cast<double>(n) / static_cast<double>(n - 1) *
                                            report.max_skew_coherence)));
    } else {
        report.identity_residuals.emplace_back("quantum_uncertainty_relation", 0.0);
        report.identity_residuals.emplace_back("skew_max_relation", 0.0);
    }

    const ComplexMatrix rotated_rho = u.adjoint() * rho.matrix() * u;
    report.identity_residuals.emplace_back(
        "iconc_trace_vs_offdiag",
        std::abs(report.i_concurrence_sq - i_concurrence_sq_offdiagonal(rotated_rho)));
    return report;
}

}  // namespace ecoh::measures
