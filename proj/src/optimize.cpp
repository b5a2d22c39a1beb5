#include "ecoh/optimize.hpp"

#include <cmath>
#include <utility>

#include "ecoh/errors.hpp"
#include "ecoh/linalg.hpp"
#include "ecoh/measures.hpp"
#include "ecoh/rng.hpp"

namespace ecoh::optimize {
namespace {

constexpr double kInitialStep = 0.3;
constexpr double kStepDecay = 0.5;
constexpr double kStepFloor = 1e-7;
constexpr double kWeightCutoff = 1e-12;

// Hermitian generator from n^2 real parameters, laid out as the standard
// observable basis coordinates: n diagonal entries, then (sym, asym) pairs
// for each j < k. Built directly instead of summing basis matrices.
ComplexMatrix generator(std::span<const double> theta, std::size_t n) {
    ComplexMatrix h(n, n);
    std::size_t idx = 0;
    for (std::size_t k = 0; k < n; ++k) h(k, k) = theta[idx++];
    const double inv_root2 = 0.7071067811865475244;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            const double sym = theta[idx++];
            const double asym = theta[idx++];
            h(j, k) = cplx(sym, -asym) * inv_root2;
            h(k, j) = cplx(sym, asym) * inv_root2;
        }
    }
    return h;
}

// exp(iH) for Hermitian H via its spectral decomposition.
ComplexMatrix unitary_exp(const ComplexMatrix& h) {
    const linalg::EigenDecomposition eig = linalg::hermitian_eig(h, 1e-9);
    const std::size_t n = h.rows();
    const ComplexMatrix& v = eig.eigenvectors;
    std::vector<cplx> phases(n);
    for (std::size_t k = 0; k < n; ++k)
        phases[k] = cplx(std::cos(eig.eigenvalues[k]), std::sin(eig.eigenvalues[k]));

    ComplexMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) sum += phases[k] * v(i, k) * std::conj(v(j, k));
            u(i, j) = sum;
        }
    return u;
}

struct SearchOutcome {
    std::vector<double> theta;
    double value = 0.0;
    std::size_t passes = 0;
    bool floored = false;
};

// Coordinate pattern search, maximizing. One pass probes +/- step on every
// coordinate; a pass without any accepted move halves the step.
template <typename F>
SearchOutcome pattern_search(std::vector<double> theta, F&& eval, std::size_t max_passes) {
    SearchOutcome out;
    out.value = eval(theta);
    double step = kInitialStep;
    while (out.passes < max_passes) {
        ++out.passes;
        bool improved = false;
        for (std::size_t k = 0; k < theta.size(); ++k) {
            const double original = theta[k];
            theta[k] = original + step;
            double candidate = eval(theta);
            if (candidate > out.value) {
                out.value = candidate;
                improved = true;
                continue;
            }
            theta[k] = original - step;
            candidate = eval(theta);
            if (candidate > out.value) {
                out.value = candidate;
                improved = true;
                continue;
            }
            theta[k] = original;
        }
        if (!improved) {
            step *= kStepDecay;
            if (step < kStepFloor) {
                out.floored = true;
                break;
            }
        }
    }
    out.theta = std::move(theta);
    return out;
}

std::vector<double> random_start(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> theta(count);
    for (double& v : theta) v = rng.uniform(-1.5, 1.5);
    return theta;
}

}  // namespace

BasisSearchResult maximize_skew_coherence(const states::DensityOperator& rho,
                                          std::size_t iterations, std::size_t restarts,
                                          std::uint64_t seed) {
    const std::size_t n = rho.dim();
    BasisSearchResult result;
    result.analytic_target = measures::max_skew_coherence_analytic(rho);
    if (n < 2) {
        result.best_basis = ComplexMatrix::identity(n);
        result.gap = result.analytic_target;
        return result;
    }
    if (restarts == 0) restarts = 1;

    const ComplexMatrix root = rho.sqrt();
    const auto eval = [&](std::span<const double> theta) {
        const ComplexMatrix u = unitary_exp(generator(theta, n));
        double total = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            cplx pk = 0.0;
            cplx sk = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                cplx rho_row = 0.0;
                cplx root_row = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    rho_row += rho.matrix()(i, j) * u(j, k);
                    root_row += root(i, j) * u(j, k);
                }
                pk += std::conj(u(i, k)) * rho_row;
                sk += std::conj(u(i, k)) * root_row;
            }
            total += pk.real() - sk.real() * sk.real();
        }
        return total;
    };

    SearchOutcome best;
    bool have_best = false;
    for (std::size_t r = 0; r < restarts; ++r) {
        std::vector<double> theta0(n * n, 0.0);
        if (r > 0) theta0 = random_start(n * n, mix_seed(seed, r));
        SearchOutcome outcome = pattern_search(std::move(theta0), eval, iterations);
        if (!have_best || outcome.value > best.value) {
            best = std::move(outcome);
            have_best = true;
        }
    }

    result.best_value = best.value;
    result.best_basis = unitary_exp(generator(best.theta, n));
    result.iterations_used = best.passes;
    result.gap = result.analytic_target - result.best_value;
    return result;
}

RoofEstimate convex_roof_upper_bound(const states::DensityOperator& varrho,
                                     std::size_t dim_a, std::size_t dim_b,
                                     std::size_t ensemble_size, std::size_t restarts,
                                     std::size_t iterations, std::uint64_t seed) {
    const std::size_t d = varrho.dim();
    if (dim_a == 0 || dim_b == 0 || d != dim_a * dim_b)
        throw Error(ErrorCode::BadShape, "density dimension does not equal dim_a * dim_b");

    std::size_t rank = 0;
    for (const double lambda : varrho.eig().eigenvalues)
        if (lambda > kWeightCutoff) ++rank;
    if (rank == 0) rank = 1;

    if (ensemble_size == 0) ensemble_size = rank + 2;
    if (ensemble_size < rank)
        throw Error(ErrorCode::RankDeficit, "ensemble size below the density rank");
    if (restarts == 0) restarts = 1;
    const std::size_t k_size = ensemble_size;

    // B carries sqrt(varrho) columnwise: column j is sqrt(lambda_j) v_j,
    // zero-padded beyond the rank. Any unitary W then gives the ensemble
    // members as the columns of B W, reconstructing varrho exactly.
    ComplexMatrix b(d, k_size);
    for (std::size_t j = 0; j < rank; ++j) {
        const double root = std::sqrt(varrho.eig().eigenvalues[j]);
        for (std::size_t i = 0; i < d; ++i) b(i, j) = root * varrho.eig().eigenvectors(i, j);
    }

    const std::size_t n = std::min(dim_a, dim_b);

    struct Member {
        double weight;
        std::vector<cplx> amplitudes;  // normalized
        double ec;
    };

    const auto members_for = [&](const ComplexMatrix& w) {
        std::vector<Member> members;
        for (std::size_t k = 0; k < k_size; ++k) {
            std::vector<cplx> tilde(d, 0.0);
            for (std::size_t i = 0; i < d; ++i) {
                cplx sum = 0.0;
                for (std::size_t j = 0; j < rank; ++j) sum += b(i, j) * w(j, k);
                tilde[i] = sum;
            }
            double weight = 0.0;
            for (const cplx& v : tilde) weight += std::norm(v);
            if (weight < kWeightCutoff) continue;

            const double inv = 1.0 / std::sqrt(weight);
            std::vector<cplx> amplitudes(d);
            for (std::size_t i = 0; i < d; ++i) amplitudes[i] = tilde[i] * inv;

            double ec = 0.0;
            if (n > 1) {
                ComplexMatrix coeffs(dim_a, dim_b, amplitudes);
                const linalg::Svd sd = linalg::svd(coeffs);
                double t = 0.0;
                for (const double sigma : sd.singular_values) t += sigma;
                ec = std::max(0.0, (t * t - 1.0) / static_cast<double>(n - 1));
            }
            members.push_back({weight, std::move(amplitudes), ec});
        }
        return members;
    };

    const auto eval = [&](std::span<const double> theta) {
        const ComplexMatrix w = unitary_exp(generator(theta, k_size));
        double total = 0.0;
        for (std::size_t k = 0; k < k_size; ++k) {
            std::vector<cplx> tilde(d, 0.0);
            double weight = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                cplx sum = 0.0;
                for (std::size_t j = 0; j < rank; ++j) sum += b(i, j) * w(j, k);
                tilde[i] = sum;
                weight += std::norm(sum);
            }
            if (weight < kWeightCutoff || n == 1) continue;

            ComplexMatrix coeffs(dim_a, dim_b);
            const double inv = 1.0 / std::sqrt(weight);
            for (std::size_t i = 0; i < dim_a; ++i)
                for (std::size_t j = 0; j < dim_b; ++j)
                    coeffs(i, j) = tilde[i * dim_b + j] * inv;
            const linalg::Svd sd = linalg::svd(coeffs);
            double t = 0.0;
            for (const double sigma : sd.singular_values) t += sigma;
            total += weight * std::max(0.0, (t * t - 1.0) / static_cast<double>(n - 1));
        }
        return total;
    };

    // pattern_search maximizes; flip the sign to minimize the average.
    const auto negated = [&](std::span<const double> theta) { return -eval(theta); };

    SearchOutcome best;
    bool have_best = false;
    for (std::size_t r = 0; r < restarts; ++r) {
        std::vector<double> theta0(k_size * k_size, 0.0);
        if (r > 0) theta0 = random_start(k_size * k_size, mix_seed(seed, r));
        SearchOutcome outcome = pattern_search(std::move(theta0), negated, iterations);
        if (!have_best || outcome.value > best.value) {
            best = std::move(outcome);
            have_best = true;
        }
    }

    RoofEstimate estimate;
    estimate.restarts_used = restarts;
    estimate.converged = best.floored;

    const ComplexMatrix w = unitary_exp(generator(best.theta, k_size));
    double upper = 0.0;
    for (const Member& member : members_for(w)) {
        upper += member.weight * member.ec;
        estimate.decomposition.push_back(
            {member.weight,
             states::new_state(dim_a, dim_b, member.amplitudes)});
    }
    estimate.upper_bound = upper;
    return estimate;
}

}  // namespace ecoh::optimize
