#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "ecoh/errors.hpp"
#include "ecoh/measures.hpp"
#include "ecoh/optimize.hpp"
#include "ecoh/states.hpp"

#include "helpers.hpp"

using ecoh::ComplexMatrix;
using ecoh::cplx;
namespace states = ecoh::states;
namespace measures = ecoh::measures;
namespace optimize = ecoh::optimize;

namespace {

states::DensityOperator diag_density(std::vector<double> p) {
    ComplexMatrix m(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m(i, i) = p[i];
    return states::DensityOperator(std::move(m));
}

double pure_ec(const states::PureBipartiteState& psi) {
    const auto which =
        psi.dim_a() <= psi.dim_b() ? states::Subsystem::A : states::Subsystem::B;
    return measures::ec_from_density(states::reduced_density(psi, which));
}

ComplexMatrix mixture_of_two(std::size_t da, std::size_t db, double w,
                             std::uint64_t seed_a, std::uint64_t seed_b) {
    const auto psi = states::random_state(da, db, seed_a);
    const auto phi = states::random_state(da, db, seed_b);
    const std::size_t d = da * db;
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const cplx a = psi.coeffs().entries()[i] * std::conj(psi.coeffs().entries()[j]);
            const cplx b = phi.coeffs().entries()[i] * std::conj(phi.coeffs().entries()[j]);
            m(i, j) = w * a + (1.0 - w) * b;
        }
    return m;
}

}  // namespace

TEST_CASE("maximize_skew_coherence named cases") {
    const auto mixed = optimize::maximize_skew_coherence(diag_density({0.5, 0.5}));
    CHECK(std::abs(mixed.best_value) < 1e-9);
    CHECK(std::abs(mixed.analytic_target) < 1e-12);

    const auto pure = optimize::maximize_skew_coherence(diag_density({1.0, 0.0}));
    CHECK(pure.analytic_target == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(pure.best_value >= 0.4999);
    CHECK(pure.best_value <= pure.analytic_target + 1e-8);

    const auto skewed = optimize::maximize_skew_coherence(diag_density({0.75, 0.25}));
    CHECK(skewed.gap <= 1e-4);
    CHECK(skewed.best_value <= skewed.analytic_target + 1e-8);
    CHECK(skewed.best_basis.unitarity_error() < 1e-9);
}

TEST_CASE("maximize_skew_coherence trivial dimension") {
    const auto result = optimize::maximize_skew_coherence(diag_density({1.0}));
    CHECK(result.best_value == 0.0);
    CHECK(result.analytic_target == 0.0);
    CHECK(result.best_basis.rows() == 1);
}

TEST_CASE("search approaches the closed-form target on random densities") {
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto rho = test_helpers::random_density(n, 2600 + trial);
        const auto result = optimize::maximize_skew_coherence(rho);
        CHECK(result.best_value <= result.analytic_target + 1e-8);
        CHECK(result.gap <= 1e-3);
    }
}

TEST_CASE("optimal basis flattens the diagonal of sqrt(rho)") {
    const auto check_flat = [](const states::DensityOperator& rho,
                               const optimize::BasisSearchResult& result) {
        const std::size_t n = rho.dim();
        const auto rotated = result.best_basis.adjoint() * rho.sqrt() * result.best_basis;
        const double target = rho.trace_sqrt() / double(n);
        for (std::size_t k = 0; k < n; ++k)
            CHECK(std::abs(rotated(k, k).real() - target) <= 1e-4);
    };

    const auto qubit = diag_density({0.75, 0.25});
    check_flat(qubit, optimize::maximize_skew_coherence(qubit));

    const auto qutrit = test_helpers::random_density(3, 77);
    check_flat(qutrit, optimize::maximize_skew_coherence(qutrit, 4000, 8, 3));
}

TEST_CASE("maximize_skew_coherence is deterministic") {
    const auto rho = test_helpers::random_density(3, 424);
    const auto a = optimize::maximize_skew_coherence(rho, 800, 3, 11);
    const auto b = optimize::maximize_skew_coherence(rho, 800, 3, 11);
    CHECK(a.best_value == b.best_value);
    CHECK(max_abs_diff(a.best_basis, b.best_basis) == 0.0);
}

TEST_CASE("convex roof reproduces the pure-state value") {
    const double r = 1.0 / std::sqrt(2.0);
    const auto bell = states::new_state(2, 2, std::vector<cplx>{r, 0.0, 0.0, r});
    ComplexMatrix proj(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            proj(i, j) =
                bell.coeffs().entries()[i] * std::conj(bell.coeffs().entries()[j]);

    const auto estimate =
        optimize::convex_roof_upper_bound(states::DensityOperator(proj, 1e-8), 2, 2);
    CHECK(std::abs(estimate.upper_bound - pure_ec(bell)) < 1e-6);
}

TEST_CASE("convex roof vanishes on separable mixtures") {
    const auto mixed = optimize::convex_roof_upper_bound(
        diag_density({0.25, 0.25, 0.25, 0.25}), 2, 2);
    CHECK(mixed.upper_bound <= 1e-3);

    const auto classical =
        optimize::convex_roof_upper_bound(diag_density({0.5, 0.0, 0.0, 0.5}), 2, 2);
    CHECK(classical.upper_bound <= 1e-3);
}

TEST_CASE("convex roof decomposition is a valid ensemble") {
    const auto m = mixture_of_two(2, 2, 0.6, 41, 42);
    const states::DensityOperator varrho(m, 1e-8);
    const auto estimate = optimize::convex_roof_upper_bound(varrho, 2, 2, 0, 2, 600, 9);

    double total = 0.0;
    double recombined = 0.0;
    ComplexMatrix rebuilt(4, 4);
    for (const auto& member : estimate.decomposition) {
        CHECK(member.weight > 0.0);
        total += member.weight;
        recombined += member.weight * pure_ec(member.state);
        const auto& amps = member.state.coeffs().entries();
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                rebuilt(i, j) += member.weight * amps[i] * std::conj(amps[j]);
    }
    CHECK(std::abs(total - 1.0) < 1e-8);
    CHECK(std::abs(recombined - estimate.upper_bound) < 1e-10);
    CHECK(max_abs_diff(rebuilt, varrho.matrix()) < 1e-6);
    CHECK(estimate.restarts_used == 2);
}

TEST_CASE("more restarts never worsen the roof bound") {
    const auto m = mixture_of_two(2, 2, 0.5, 61, 62);
    const states::DensityOperator varrho(m, 1e-8);
    const auto one = optimize::convex_roof_upper_bound(varrho, 2, 2, 0, 1, 400, 5);
    const auto three = optimize::convex_roof_upper_bound(varrho, 2, 2, 0, 3, 400, 5);
    const auto six = optimize::convex_roof_upper_bound(varrho, 2, 2, 0, 6, 400, 5);
    CHECK(three.upper_bound <= one.upper_bound + 1e-15);
    CHECK(six.upper_bound <= three.upper_bound + 1e-15);

    const auto again = optimize::convex_roof_upper_bound(varrho, 2, 2, 0, 3, 400, 5);
    CHECK(again.upper_bound == three.upper_bound);
}

TEST_CASE("convex roof argument validation") {
    try {
        (void)optimize::convex_roof_upper_bound(diag_density({0.25, 0.25, 0.25, 0.25}),
                                                2, 2, 3);
        FAIL("expected throw");
    } catch (const ecoh::Error& e) {
        CHECK(e.code() == ecoh::ErrorCode::RankDeficit);
    }
    try {
        (void)optimize::convex_roof_upper_bound(diag_density({0.25, 0.25, 0.25, 0.25}),
                                                3, 2);
        FAIL("expected throw");
    } catch (const ecoh::Error& e) {
        CHECK(e.code() == ecoh::ErrorCode::BadShape);
    }
}
