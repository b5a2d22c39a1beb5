#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "ecoh/errors.hpp"
#include "ecoh/linalg.hpp"
#include "ecoh/measures.hpp"
#include "ecoh/states.hpp"

#include "helpers.hpp"

using ecoh::ComplexMatrix;
using ecoh::cplx;
namespace linalg = ecoh::linalg;
namespace states = ecoh::states;
namespace measures = ecoh::measures;

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kRoot3 = std::sqrt(3.0);

states::DensityOperator diag_density(std::vector<double> p) {
    ComplexMatrix m(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m(i, i) = p[i];
    return states::DensityOperator(std::move(m));
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix hadamard() {
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(2, 2);
    m(0, 0) = r;
    m(0, 1) = r;
    m(1, 0) = r;
    m(1, 1) = -r;
    return m;
}

ComplexMatrix rotate(const ComplexMatrix& m, const ComplexMatrix& u) {
    return u.adjoint() * m * u;
}

}  // namespace

TEST_CASE("ec_from_schmidt named values and errors") {
    const std::vector<double> two_thirds{2.0 / 3.0, 1.0 / 3.0};
    CHECK(measures::ec_from_schmidt(two_thirds, 3) ==
          doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-12));

    const std::vector<double> unit{1.0};
    CHECK(measures::ec_from_schmidt(unit, 1) == 0.0);
    CHECK(measures::ec_from_schmidt(unit, 4) == 0.0);

    for (std::size_t n = 2; n <= 6; ++n) {
        const std::vector<double> uniform(n, 1.0 / double(n));
        CHECK(measures::ec_from_schmidt(uniform, n) == doctest::Approx(1.0).epsilon(1e-12));
    }

    const std::vector<double> bad_sum{0.5, 0.6};
    CHECK_THROWS_AS((void)measures::ec_from_schmidt(bad_sum, 2), ecoh::Error);
    const std::vector<double> negative{-0.1, 1.1};
    CHECK_THROWS_AS((void)measures::ec_from_schmidt(negative, 2), ecoh::Error);
    const std::vector<double> too_long{0.5, 0.3, 0.2};
    CHECK_THROWS_AS((void)measures::ec_from_schmidt(too_long, 2), ecoh::Error);
    try {
        (void)measures::ec_from_schmidt(bad_sum, 2);
        FAIL("expected throw");
    } catch (const ecoh::Error& e) {
        CHECK(e.code() == ecoh::ErrorCode::BadDistribution);
    }
}

TEST_CASE("ec_from_density named values") {
    CHECK(measures::ec_from_density(diag_density({0.75, 0.25})) ==
          doctest::Approx(kRoot3 / 2.0).epsilon(1e-12));
    CHECK(measures::ec_from_density(diag_density({1.0, 0.0})) == doctest::Approx(0.0));
    for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<double> p(n, 1.0 / double(n));
        CHECK(measures::ec_from_density(diag_density(std::move(p))) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }

    const auto padded = measures::ec_from_density(diag_density({2.0 / 3.0, 1.0 / 3.0}), 3);
    CHECK(padded == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-12));
}

TEST_CASE("ec_from_sqrt_matrix agrees in rotated bases and validates input") {
    const auto rho = test_helpers::random_density(4, 51);
    const double reference = measures::ec_from_density(rho);
    const auto root = rho.sqrt();
    CHECK(measures::ec_from_sqrt_matrix(root, 4) ==
          doctest::Approx(reference).epsilon(1e-10));
    for (int k = 0; k < 5; ++k) {
        const auto u = linalg::haar_random_unitary(4, 900 + k);
        CHECK(measures::ec_from_sqrt_matrix(rotate(root, u), 4) ==
              doctest::Approx(reference).epsilon(1e-9));
    }

    ComplexMatrix not_hermitian(2, 2);
    not_hermitian(0, 1) = 0.3;
    CHECK_THROWS_AS((void)measures::ec_from_sqrt_matrix(not_hermitian, 2), ecoh::Error);

    ComplexMatrix wrong_trace(2, 2);
    wrong_trace(0, 0) = 1.0;
    wrong_trace(1, 1) = 1.0;
    CHECK_THROWS_AS((void)measures::ec_from_sqrt_matrix(wrong_trace, 2), ecoh::Error);
}

TEST_CASE("i_concurrence two forms") {
    const auto bell = states::new_state(
        2, 2, std::vector<cplx>{1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)});
    const auto rho = states::reduced_density(bell, states::Subsystem::A);
    CHECK(measures::i_concurrence_sq(rho) == doctest::Approx(1.0).epsilon(1e-12));

    for (int trial = 0; trial < 20; ++trial) {
        const auto density = test_helpers::random_density(3, 700 + trial);
        const double tr_form = measures::i_concurrence_sq(density);
        for (int k = 0; k < 5; ++k) {
            const auto u = linalg::haar_random_unitary(3, 7100 + 5 * trial + k);
            const double off_form =
                measures::i_concurrence_sq_offdiagonal(rotate(density.matrix(), u));
            CHECK(std::abs(tr_form - off_form) < 1e-10);
        }
    }
}

TEST_CASE("entropy of entanglement") {
    const double expected = std::log(3.0) - (2.0 / 3.0) * std::log(2.0);
    const auto rho = diag_density({2.0 / 3.0, 1.0 / 3.0});
    CHECK(measures::entropy_of_entanglement(rho, 3) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(measures::entropy_of_entanglement(rho, 3, true) ==
          doctest::Approx(expected / std::log(3.0)).epsilon(1e-12));
    CHECK(measures::entropy_of_entanglement(diag_density({1.0, 0.0}), 2) ==
          doctest::Approx(0.0));
    CHECK(measures::entropy_of_entanglement(diag_density({0.5, 0.5}), 2, true) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("unified entropy") {
    const auto pure = diag_density({1.0, 0.0});
    for (const auto [r, s] : {std::pair{0.5, 2.0}, std::pair{2.0, 1.0},
                              std::pair{3.0, 0.7}, std::pair{0.3, -1.2}})
        CHECK(std::abs(measures::unified_entropy(pure, r, s)) < 1e-12);

    const auto mixed = diag_density({0.5, 0.5});
    CHECK(measures::unified_entropy(mixed, 0.5, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(measures::unified_entropy(mixed, 2.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS((void)measures::unified_entropy(mixed, -1.0, 1.0), ecoh::Error);
    CHECK_THROWS_AS((void)measures::unified_entropy(mixed, 1.0, 1.0), ecoh::Error);
    CHECK_THROWS_AS((void)measures::unified_entropy(mixed, 0.5, 0.0), ecoh::Error);
}

TEST_CASE("unified entropy at r = s = 1/2 ties to ec") {
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const auto rho = test_helpers::random_density(n, 1200 + trial);
        const double lhs = double(n - 1) * measures::ec_from_density(rho);
        const double rhs = measures::unified_entropy(rho, 0.5, 2.0);
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("skew information") {
    const std::vector<double> commuting{2.0, 5.0};
    CHECK(std::abs(measures::skew_information(diag_density({0.75, 0.25}),
                                              ComplexMatrix::diagonal(commuting))) < 1e-12);

    const auto pure = diag_density({1.0, 0.0});
    CHECK(measures::skew_information(pure, pauli_x()) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(measures::skew_information(diag_density({0.75, 0.25}), pauli_x()) ==
          doctest::Approx(1.0 - kRoot3 / 2.0).epsilon(1e-12));

    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto rho = test_helpers::random_density(n, 3300 + trial);
        const auto a = test_helpers::random_hermitian(n, 3400 + trial);
        const double skew = measures::skew_information(rho, a);
        const double tr_rho_a = (rho.matrix() * a).trace().real();
        const double tr_rho_a2 = (rho.matrix() * a * a).trace().real();
        const double variance = tr_rho_a2 - tr_rho_a * tr_rho_a;
        CHECK(skew >= -1e-12);
        CHECK(skew <= variance + 1e-10);
    }

    CHECK_THROWS_AS(
        (void)measures::skew_information(diag_density({0.5, 0.5}), ComplexMatrix(3, 3)),
        ecoh::Error);
    ComplexMatrix skewed(2, 2);
    skewed(0, 1) = 1.0;
    CHECK_THROWS_AS((void)measures::skew_information(diag_density({0.5, 0.5}), skewed),
                    ecoh::Error);
}

TEST_CASE("skew coherence") {
    const auto rho = diag_density({0.75, 0.25});
    CHECK(std::abs(measures::skew_coherence(rho, ComplexMatrix::identity(2))) < 1e-12);
    CHECK(measures::skew_coherence(diag_density({1.0, 0.0}), hadamard()) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(measures::skew_coherence(diag_density({0.5, 0.5}), hadamard())) < 1e-12);

    ComplexMatrix not_unitary(2, 2);
    not_unitary(0, 0) = 1.0;
    not_unitary(1, 1) = 0.5;
    CHECK_THROWS_AS((void)measures::skew_coherence(rho, not_unitary), ecoh::Error);
    CHECK_THROWS_AS((void)measures::skew_coherence(rho, ComplexMatrix::identity(3)),
                    ecoh::Error);
}

TEST_CASE("max skew coherence closed form") {
    CHECK(measures::max_skew_coherence_analytic(diag_density({0.75, 0.25})) ==
          doctest::Approx(0.5 - kRoot3 / 4.0).epsilon(1e-12));
    CHECK(std::abs(measures::max_skew_coherence_analytic(diag_density({0.5, 0.5}))) < 1e-12);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto rho = test_helpers::random_density(n, 4500 + trial);
        const double target = measures::max_skew_coherence_analytic(rho);
        for (int k = 0; k < 3; ++k) {
            const auto u = linalg::haar_random_unitary(n, 4600 + 3 * trial + k);
            CHECK(measures::skew_coherence(rho, u) <= target + 1e-9);
        }
    }
}

TEST_CASE("quantum uncertainty is basis independent") {
    const auto rho = diag_density({0.75, 0.25});
    CHECK(measures::quantum_uncertainty(rho) ==
          doctest::Approx(1.0 - kRoot3 / 2.0).epsilon(1e-12));

    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto density = test_helpers::random_density(n, 5200 + trial);
        const double closed = measures::quantum_uncertainty(density);
        const auto standard = measures::standard_observable_basis(n);
        CHECK(std::abs(measures::quantum_uncertainty(density, standard) - closed) < 1e-8);

        const auto u = linalg::haar_random_unitary(n, 5300 + trial);
        measures::ObservableBasis rotated;
        for (const auto& op : standard.operators)
            rotated.operators.push_back(u * op * u.adjoint());
        CHECK(std::abs(measures::quantum_uncertainty(density, rotated) - closed) < 1e-8);
    }

    measures::ObservableBasis truncated = measures::standard_observable_basis(2);
    truncated.operators.pop_back();
    CHECK_THROWS_AS((void)measures::quantum_uncertainty(rho, truncated), ecoh::Error);

    measures::ObservableBasis scaled = measures::standard_observable_basis(2);
    scaled.operators[0] = scaled.operators[0] * 1.1;
    try {
        (void)measures::quantum_uncertainty(rho, scaled);
        FAIL("expected throw");
    } catch (const ecoh::Error& e) {
        CHECK(e.code() == ecoh::ErrorCode::BadBasis);
    }
}

TEST_CASE("standard observable basis is orthonormal") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto basis = measures::standard_observable_basis(n);
        REQUIRE(basis.operators.size() == n * n);
        for (std::size_t i = 0; i < basis.operators.size(); ++i) {
            CHECK(basis.operators[i].hermiticity_error() < 1e-14);
            for (std::size_t j = 0; j < basis.operators.size(); ++j) {
                const double tr = (basis.operators[i] * basis.operators[j]).trace().real();
                CHECK(std::abs(tr - (i == j ? 1.0 : 0.0)) < 1e-12);
            }
        }
    }
}

TEST_CASE("joint basis coherence") {
    const auto product = states::product_state(2, 3, 1, 2);
    CHECK(std::abs(measures::joint_basis_coherence(product, ComplexMatrix::identity(2),
                                                   ComplexMatrix::identity(3))) < 1e-12);

    const auto bell = states::new_state(
        2, 2, std::vector<cplx>{1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)});
    const auto sd = states::schmidt_decompose(bell);
    CHECK(measures::joint_basis_coherence(bell, sd.basis_a, sd.basis_b) ==
          doctest::Approx(1.0).epsilon(1e-10));

    const double moved =
        measures::joint_basis_coherence(bell, hadamard(), ComplexMatrix::identity(2));
    CHECK(moved == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(moved >= 1.0);
}

TEST_CASE("schmidt bases minimize joint coherence on random states") {
    for (int trial = 0; trial < 25; ++trial) {
        const auto psi = states::random_state(3, 3, 6100 + trial);
        const auto sd = states::schmidt_decompose(psi);
        const auto base_a = ecoh::linalg::complete_basis(sd.basis_a);
        const auto base_b = ecoh::linalg::complete_basis(sd.basis_b);
        const double at_schmidt = measures::joint_basis_coherence(psi, base_a, base_b);
        for (int k = 0; k < 6; ++k) {
            const auto u = linalg::haar_random_unitary(3, 6200 + 6 * trial + k);
            const auto v = linalg::haar_random_unitary(3, 6300 + 6 * trial + k);
            CHECK(measures::joint_basis_coherence(psi, u, v) >= at_schmidt - 1e-9);
        }
    }
}

TEST_CASE("three forms agree on random states") {
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t da = 2 + trial % 5;
        const std::size_t db = 2 + (trial / 5) % 5;
        const auto psi = states::random_state(da, db, 9000 + trial);
        const std::size_t n = psi.min_dim();

        const auto rho = states::reduced_density(
            psi, da <= db ? states::Subsystem::A : states::Subsystem::B);
        const auto sd = states::schmidt_decompose(psi);
        std::vector<double> p;
        for (const double c : sd.coefficients) p.push_back(c * c);
        const double sum = [&] {
            double s = 0.0;
            for (double v : p) s += v;
            return s;
        }();
        for (double& v : p) v /= sum;

        const double from_schmidt = measures::ec_from_schmidt(p, n);
        const double from_density = measures::ec_from_density(rho);
        const auto u = linalg::haar_random_unitary(n, 9700 + trial);
        const double from_sqrt = measures::ec_from_sqrt_matrix(rotate(rho.sqrt(), u), n);

        CHECK(std::abs(from_schmidt - from_density) < 1e-9);
        CHECK(std::abs(from_density - from_sqrt) < 1e-9);
        CHECK(from_density >= -1e-12);
        CHECK(from_density <= 1.0 + 1e-12);
    }
}

TEST_CASE("identity chain on random densities") {
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const auto rho = test_helpers::random_density(n, 10500 + trial);
        const double ec = measures::ec_from_density(rho);
        const double q = measures::quantum_uncertainty(rho);
        const double max_ci = measures::max_skew_coherence_analytic(rho);

        CHECK(std::abs(ec - (1.0 - q / double(n - 1))) < 1e-12);
        CHECK(std::abs(ec - (1.0 - double(n) / double(n - 1) * max_ci)) < 1e-12);
        CHECK(std::abs(q - (double(n) - rho.trace_sqrt() * rho.trace_sqrt())) < 1e-12);
        CHECK(std::abs(double(n - 1) * ec - measures::unified_entropy(rho, 0.5, 2.0)) <
              1e-10);
    }
}

TEST_CASE("ec is symmetric across subsystems and locally invariant") {
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t da = 2 + trial % 3;
        const std::size_t db = 2 + (trial / 3) % 3;
        const auto psi = states::random_state(da, db, 11800 + trial);
        const std::size_t n = psi.min_dim();

        const auto rho_a = states::reduced_density(psi, states::Subsystem::A);
        const auto rho_b = states::reduced_density(psi, states::Subsystem::B);
        CHECK(std::abs(measures::ec_from_density(rho_a, n) -
                       measures::ec_from_density(rho_b, n)) < 1e-10);

        const auto u = linalg::haar_random_unitary(da, 11900 + trial);
        const auto v = linalg::haar_random_unitary(db, 12000 + trial);
        const states::PureBipartiteState moved(da, db, u * psi.coeffs() * v.transpose());
        const auto rho_moved = states::reduced_density(
            moved, da <= db ? states::Subsystem::A : states::Subsystem::B);
        const auto rho_ref = da <= db ? rho_a : rho_b;
        CHECK(std::abs(measures::ec_from_density(rho_moved) -
                       measures::ec_from_density(rho_ref)) < 1e-10);
    }
}

TEST_CASE("full report") {
    const auto report = measures::full_report(states::make_psi1(kPi / 4.0));
    CHECK(report.n == 3);
    CHECK(report.ec == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report.entropy_norm == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report.i_concurrence_norm == doctest::Approx(1.0).epsilon(1e-9));
    for (const auto& [name, value] : report.identity_residuals) {
        INFO(name);
        CHECK(value < 1e-8);
    }

    const auto product = measures::full_report(states::product_state(2, 2, 0, 1));
    CHECK(product.ec == doctest::Approx(0.0));
    CHECK(product.i_concurrence_sq == doctest::Approx(0.0));
    CHECK(product.quantum_uncertainty == doctest::Approx(1.0).epsilon(1e-9));
    for (const auto& [name, value] : product.identity_residuals) {
        INFO(name);
        CHECK(value < 1e-8);
    }

    const auto random = measures::full_report(states::random_state(4, 4, 7));
    CHECK(random.n == 4);
    CHECK(random.ec >= 0.0);
    CHECK(random.ec <= 1.0);
    for (const auto& [name, value] : random.identity_residuals) {
        INFO(name);
        CHECK(value < 1e-8);
    }
}
