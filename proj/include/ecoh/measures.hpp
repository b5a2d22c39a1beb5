#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecoh/matrix.hpp"
#include "ecoh/states.hpp"

namespace ecoh::measures {

// n^2 Hermitian operators orthonormal under <A,B> = Tr(AB).
struct ObservableBasis {
    std::vector<ComplexMatrix> operators;
};

// Every measure evaluated on one state, plus the residuals of the audited
// identities tying them together.
struct MeasureReport {
    std::size_t n = 0;             // min local dimension
    double ec = 0.0;               // entanglement coherence, in [0, 1]
    double i_concurrence_sq = 0.0;
    double i_concurrence_norm = 0.0;
    double entropy = 0.0;          // nats
    double entropy_norm = 0.0;
    double quantum_uncertainty = 0.0;
    double max_skew_coherence = 0.0;
    std::vector<std::pair<std::string, double>> identity_residuals;
};

// Schmidt-basis coherence of the distribution p: sum_{j != k} sqrt(p_j p_k)
// normalized by (n - 1). For n = 1 the measure is defined as 0.
double ec_from_schmidt(std::span<const double> p, std::size_t n);

// (Tr sqrt(rho))^2 - 1 normalized by (n - 1). n defaults to rho's matrix
// dimension; pass n_override for a padded rho.
double ec_from_density(const states::DensityOperator& rho, std::size_t n_override = 0);

// Off-diagonal form evaluated on sqrt(rho) in whatever basis it is given:
// sum_{j != k} (s_jj s_kk - |s_jk|^2) / (n - 1). Basis independent.
double ec_from_sqrt_matrix(const ComplexMatrix& sqrt_rho, std::size_t n);

// 2 [1 - Tr(rho^2)].
double i_concurrence_sq(const states::DensityOperator& rho);
// Same quantity as 2 sum_{j != k} (m_jj m_kk - |m_jk|^2) on a density matrix
// expressed in any basis.
double i_concurrence_sq_offdiagonal(const ComplexMatrix& rho_matrix);

// von Neumann entropy of the spectrum, natural log; the normalized variant
// divides by ln(n).
double entropy_of_entanglement(const states::DensityOperator& rho, std::size_t n,
                               bool normalized = false);

// (1 / ((1-r) s)) [(Tr rho^r)^s - 1], r > 0, r != 1, s != 0.
double unified_entropy(const states::DensityOperator& rho, double r, double s);

// -1/2 Tr([sqrt(rho), A]^2) = Tr(rho A^2) - Tr(sqrt(rho) A sqrt(rho) A).
double skew_information(const states::DensityOperator& rho, const ComplexMatrix& a);

// Sum of skew informations of the basis projectors: columns of `basis`.
double skew_coherence(const states::DensityOperator& rho, const ComplexMatrix& basis);

// Closed form of the basis-maximized skew coherence: 1 - (Tr sqrt(rho))^2 / n.
double max_skew_coherence_analytic(const states::DensityOperator& rho);

// Closed form n - (Tr sqrt(rho))^2, and the direct n^2-term sum used to
// check that the value does not depend on the observable basis.
double quantum_uncertainty(const states::DensityOperator& rho);
double quantum_uncertainty(const states::DensityOperator& rho, const ObservableBasis& basis);

// Normalized diagonal units plus symmetric/antisymmetric off-diagonal pairs
// scaled by 1/sqrt(2).
ObservableBasis standard_observable_basis(std::size_t n);

// Unnormalized sum of |<alpha_i beta_j| psi><psi |alpha_i' beta_j'>| over all
// off-diagonal joint-index pairs, for the product basis given by the columns
// of basis_a and basis_b. Equals (n - 1) ec in the Schmidt bases.
double joint_basis_coherence(const states::PureBipartiteState& psi,
                             const ComplexMatrix& basis_a, const ComplexMatrix& basis_b);

MeasureReport full_report(const states::PureBipartiteState& psi);

}  // namespace ecoh::measures
