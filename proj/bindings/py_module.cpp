#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>
#include <vector>

#include "ecoh/cli.hpp"
#include "ecoh/errors.hpp"
#include "ecoh/measures.hpp"
#include "ecoh/optimize.hpp"
#include "ecoh/states.hpp"

namespace py = pybind11;

using ecoh::ComplexMatrix;
using ecoh::cplx;
namespace states = ecoh::states;
namespace measures = ecoh::measures;
namespace optimize = ecoh::optimize;

namespace {

ComplexMatrix to_matrix(const std::vector<std::vector<cplx>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    ComplexMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw ecoh::Error(ecoh::ErrorCode::BadShape, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<std::vector<cplx>> from_matrix(const ComplexMatrix& m) {
    std::vector<std::vector<cplx>> rows(m.rows(), std::vector<cplx>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

std::vector<cplx> amplitudes_of(const states::PureBipartiteState& psi) {
    const auto span = psi.coeffs().entries();
    return {span.begin(), span.end()};
}

double pure_ec(const states::PureBipartiteState& psi) {
    const auto side =
        psi.dim_a() <= psi.dim_b() ? states::Subsystem::A : states::Subsystem::B;
    return measures::ec_from_density(states::reduced_density(psi, side));
}

}  // namespace

PYBIND11_MODULE(_ecoh, m) {
    m.doc() = "entanglement coherence toolkit (C++ core)";

    py::register_exception<ecoh::Error>(m, "Error");
    py::register_exception<ecoh::ParseError>(m, "ParseError");

    m.def(
        "ec",
        [](std::size_t dim_a, std::size_t dim_b, const std::vector<cplx>& amplitudes) {
            return pure_ec(states::new_state(dim_a, dim_b, amplitudes));
        },
        py::arg("dim_a"), py::arg("dim_b"), py::arg("amplitudes"),
        "Entanglement coherence of a pure bipartite state.");

    m.def(
        "schmidt_coefficients",
        [](std::size_t dim_a, std::size_t dim_b, const std::vector<cplx>& amplitudes) {
            return states::schmidt_decompose(states::new_state(dim_a, dim_b, amplitudes))
                .coefficients;
        },
        py::arg("dim_a"), py::arg("dim_b"), py::arg("amplitudes"),
        "Singular values of the coefficient matrix, descending.");

    m.def(
        "full_report",
        [](std::size_t dim_a, std::size_t dim_b, const std::vector<cplx>& amplitudes) {
            const auto report =
                measures::full_report(states::new_state(dim_a, dim_b, amplitudes));
            py::dict d;
            d["n"] = report.n;
            d["ec"] = report.ec;
            d["i_concurrence_sq"] = report.i_concurrence_sq;
            d["i_concurrence_norm"] = report.i_concurrence_norm;
            d["entropy"] = report.entropy;
            d["entropy_norm"] = report.entropy_norm;
            d["quantum_uncertainty"] = report.quantum_uncertainty;
            d["max_skew_coherence"] = report.max_skew_coherence;
            py::dict residuals;
            for (const auto& [name, value] : report.identity_residuals)
                residuals[py::str(name)] = value;
            d["identity_residuals"] = residuals;
            return d;
        },
        py::arg("dim_a"), py::arg("dim_b"), py::arg("amplitudes"),
        "Every measure plus the identity residuals, as a dict.");

    m.def(
        "psi1", [](double theta) { return amplitudes_of(states::make_psi1(theta)); },
        py::arg("theta"), "Row-major amplitudes of the first qutrit family.");
    m.def(
        "psi2", [](double x) { return amplitudes_of(states::make_psi2(x)); },
        py::arg("x"), "Row-major amplitudes of the second qutrit family.");
    m.def(
        "maximally_entangled",
        [](std::size_t n) { return amplitudes_of(states::maximally_entangled(n)); },
        py::arg("n"));
    m.def(
        "product_state",
        [](std::size_t dim_a, std::size_t dim_b, std::size_t i, std::size_t j) {
            return amplitudes_of(states::product_state(dim_a, dim_b, i, j));
        },
        py::arg("dim_a"), py::arg("dim_b"), py::arg("i"), py::arg("j"));
    m.def(
        "random_state",
        [](std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
            return amplitudes_of(states::random_state(dim_a, dim_b, seed));
        },
        py::arg("dim_a"), py::arg("dim_b"), py::arg("seed"));

    m.def(
        "maximize_skew_coherence",
        [](const std::vector<std::vector<cplx>>& density, std::size_t iterations,
           std::size_t restarts, std::uint64_t seed) {
            const states::DensityOperator rho(to_matrix(density));
            const auto result =
                optimize::maximize_skew_coherence(rho, iterations, restarts, seed);
            py::dict d;
            d["best_value"] = result.best_value;
            d["analytic_target"] = result.analytic_target;
            d["gap"] = result.gap;
            d["iterations_used"] = result.iterations_used;
            d["best_basis"] = from_matrix(result.best_basis);
            return d;
        },
        py::arg("density"), py::arg("iterations") = 2000, py::arg("restarts") = 8,
        py::arg("seed") = 0,
        "Pattern search for the basis maximizing skew coherence.");

    m.def(
        "convex_roof_upper_bound",
        [](const std::vector<std::vector<cplx>>& density, std::size_t dim_a,
           std::size_t dim_b, std::size_t ensemble, std::size_t restarts,
           std::size_t iterations, std::uint64_t seed) {
            const states::DensityOperator varrho(to_matrix(density));
            const auto estimate = optimize::convex_roof_upper_bound(
                varrho, dim_a, dim_b, ensemble, restarts, iterations, seed);
            py::list members;
            for (const auto& member : estimate.decomposition) {
                py::dict entry;
                entry["weight"] = member.weight;
                entry["amplitudes"] = amplitudes_of(member.state);
                entry["ec"] = pure_ec(member.state);
                members.append(entry);
            }
            py::dict d;
            d["upper_bound"] = estimate.upper_bound;
            d["restarts_used"] = estimate.restarts_used;
            d["converged"] = estimate.converged;
            d["members"] = members;
            return d;
        },
        py::arg("density"), py::arg("dim_a"), py::arg("dim_b"),
        py::arg("ensemble") = 0, py::arg("restarts") = 6, py::arg("iterations") = 4000,
        py::arg("seed") = 0,
        "Ensemble-average upper bound on the mixed-state measure.");

    m.def(
        "sweep",
        [](const std::string& family, std::size_t steps) {
            py::list rows;
            for (const auto& row : ecoh::cli::sweep_rows(family, steps)) {
                py::dict entry;
                entry["param"] = row.param;
                entry["ec"] = row.ec;
                entry["iconc_norm"] = row.iconc_norm;
                entry["entropy_norm"] = row.entropy_norm;
                rows.append(entry);
            }
            return rows;
        },
        py::arg("family"), py::arg("steps"),
        "Uniform parameter sweep over the psi1 or psi2 family.");
}
