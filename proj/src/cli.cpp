#include "ecoh/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ecoh/errors.hpp"
#include "ecoh/linalg.hpp"
#include "ecoh/measures.hpp"
#include "ecoh/optimize.hpp"
#include "ecoh/rng.hpp"
#include "ecoh/states.hpp"

namespace ecoh::cli {
namespace {

std::string fmt9(double value) { return io::format_fixed(value, 9); }

std::string fmt_sci(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.6e", value);
    return buffer;
}

double pure_ec(const states::PureBipartiteState& psi) {
    const std::size_t n = psi.min_dim();
    if (n == 1) return 0.0;
    const auto side = psi.dim_a() <= psi.dim_b() ? states::Subsystem::A : states::Subsystem::B;
    return measures::ec_from_density(states::reduced_density(psi, side));
}

int cmd_measure(const std::string& path, const std::string& format) {
    const states::PureBipartiteState psi = io::read_state_file(path);
    const measures::MeasureReport report = measures::full_report(psi);

    if (format == "csv") {
        std::printf("field,value\n");
        std::printf("dim_a,%zu\n", psi.dim_a());
        std::printf("dim_b,%zu\n", psi.dim_b());
        std::printf("n,%zu\n", report.n);
        std::printf("ec,%s\n", fmt9(report.ec).c_str());
        std::printf("i_concurrence_sq,%s\n", fmt9(report.i_concurrence_sq).c_str());
        std::printf("i_concurrence_norm,%s\n", fmt9(report.i_concurrence_norm).c_str());
        std::printf("entropy,%s\n", fmt9(report.entropy).c_str());
        std::printf("entropy_norm,%s\n", fmt9(report.entropy_norm).c_str());
        std::printf("quantum_uncertainty,%s\n", fmt9(report.quantum_uncertainty).c_str());
        std::printf("max_skew_coherence,%s\n", fmt9(report.max_skew_coherence).c_str());
        for (const auto& [name, value] : report.identity_residuals)
            std::printf("residual_%s,%s\n", name.c_str(), fmt_sci(value).c_str());
        return 0;
    }

    std::printf("dims: %zu x %zu\n", psi.dim_a(), psi.dim_b());
    std::printf("n: %zu\n", report.n);
    std::printf("ec: %s\n", fmt9(report.ec).c_str());
    std::printf("i_concurrence_sq: %s\n", fmt9(report.i_concurrence_sq).c_str());
    std::printf("i_concurrence_norm: %s\n", fmt9(report.i_concurrence_norm).c_str());
    std::printf("entropy: %s\n", fmt9(report.entropy).c_str());
    std::printf("entropy_norm: %s\n", fmt9(report.entropy_norm).c_str());
    std::printf("quantum_uncertainty: %s\n", fmt9(report.quantum_uncertainty).c_str());
    std::printf("max_skew_coherence: %s\n", fmt9(report.max_skew_coherence).c_str());
    for (const auto& [name, value] : report.identity_residuals)
        std::printf("residual %s: %s\n", name.c_str(), fmt_sci(value).c_str());
    return 0;
}

int cmd_sweep(const std::string& family, std::size_t steps, const std::string& out_path) {
    const std::vector<io::SweepRow> rows = sweep_rows(family, steps);
    io::write_text_file(out_path, io::sweep_csv(rows));
    return 0;
}

struct AuditAccumulator {
    std::vector<std::pair<std::string, double>> maxima;

    void fold(const std::string& name, double residual) {
        for (auto& [key, value] : maxima) {
            if (key == name) {
                value = std::max(value, residual);
                return;
            }
        }
        maxima.emplace_back(name, residual);
    }
};

int cmd_audit(std::size_t trials, std::size_t max_dim, std::uint64_t seed) {
    AuditAccumulator acc;
    std::size_t violations = 0;
    std::size_t comparisons = 0;
    double min_margin = 1e300;

    constexpr std::size_t kConjectureBases = 20;

    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = mix_seed(seed, t);
        Rng dims_rng(trial_seed);
        const std::size_t span = max_dim - 1;
        const std::size_t dim_a = 2 + dims_rng.next_u64() % span;
        const std::size_t dim_b = 2 + dims_rng.next_u64() % span;

        const states::PureBipartiteState psi =
            states::random_state(dim_a, dim_b, mix_seed(trial_seed, 1));
        const std::size_t n = psi.min_dim();

        const measures::MeasureReport report = measures::full_report(psi);
        for (const auto& [name, value] : report.identity_residuals) acc.fold(name, value);

        // Both reductions carry the same measure.
        const states::DensityOperator rho_a = states::reduced_density(psi, states::Subsystem::A);
        const states::DensityOperator rho_b = states::reduced_density(psi, states::Subsystem::B);
        acc.fold("subsystem_symmetry", std::abs(measures::ec_from_density(rho_a, n) -
                                                measures::ec_from_density(rho_b, n)));

        // Local unitaries must not move the measure.
        const ComplexMatrix lu = linalg::haar_random_unitary(dim_a, mix_seed(trial_seed, 2));
        const ComplexMatrix lv = linalg::haar_random_unitary(dim_b, mix_seed(trial_seed, 3));
        const states::PureBipartiteState rotated(
            dim_a, dim_b, lu * psi.coeffs() * lv.transpose());
        acc.fold("local_unitary_invariance", std::abs(pure_ec(rotated) - pure_ec(psi)));

        // Summed quantum uncertainty is observable-basis independent.
        const states::DensityOperator& rho = dim_a <= dim_b ? rho_a : rho_b;
        const double q_closed = measures::quantum_uncertainty(rho);
        const measures::ObservableBasis standard = measures::standard_observable_basis(n);
        acc.fold("q_basis_standard",
                 std::abs(q_closed - measures::quantum_uncertainty(rho, standard)));

        const ComplexMatrix rot = linalg::haar_random_unitary(n, mix_seed(trial_seed, 4));
        measures::ObservableBasis rotated_basis;
        rotated_basis.operators.reserve(standard.operators.size());
        for (const ComplexMatrix& x : standard.operators)
            rotated_basis.operators.push_back(rot * x * rot.adjoint());
        acc.fold("q_basis_rotated",
                 std::abs(q_closed - measures::quantum_uncertainty(rho, rotated_basis)));

        // Conjecture probe: does any product basis beat the Schmidt bases?
        const states::SchmidtDecomposition schmidt = states::schmidt_decompose(psi);
        const ComplexMatrix schmidt_a = linalg::complete_basis(schmidt.basis_a);
        const ComplexMatrix schmidt_b = linalg::complete_basis(schmidt.basis_b);
        const double schmidt_value = measures::joint_basis_coherence(psi, schmidt_a, schmidt_b);
        for (std::size_t i = 0; i < kConjectureBases; ++i) {
            const ComplexMatrix ua =
                linalg::haar_random_unitary(dim_a, mix_seed(trial_seed, 100 + 2 * i));
            const ComplexMatrix ub =
                linalg::haar_random_unitary(dim_b, mix_seed(trial_seed, 101 + 2 * i));
            const double value = measures::joint_basis_coherence(psi, ua, ub);
            const double margin = value - schmidt_value;
            min_margin = std::min(min_margin, margin);
            ++comparisons;
            if (margin < -1e-9) ++violations;
        }
    }

    std::printf("trials: %zu\n", trials);
    std::printf("max_dim: %zu\n", max_dim);
    std::printf("seed: %llu\n", static_cast<unsigned long long>(seed));
    bool pass = true;
    for (const auto& [name, value] : acc.maxima) {
        std::printf("identity %s max_residual %s\n", name.c_str(), fmt_sci(value).c_str());
        if (value > 1e-8) pass = false;
    }
    std::printf("conjecture schmidt_minimality violations %zu of %zu (min margin %s)\n",
                violations, comparisons, fmt_sci(min_margin).c_str());
    std::printf("audit: %s\n", pass ? "PASS" : "FAIL");
    return pass ? 0 : 1;
}

int cmd_optimize_basis(const std::string& path, std::size_t iterations, std::size_t restarts,
                       std::uint64_t seed, double tolerance) {
    const ComplexMatrix matrix = io::read_density_file(path);
    const states::DensityOperator rho(matrix, tolerance);
    const optimize::BasisSearchResult result =
        optimize::maximize_skew_coherence(rho, iterations, restarts, seed);

    std::printf("best_value: %s\n", fmt9(result.best_value).c_str());
    std::printf("analytic_target: %s\n", fmt9(result.analytic_target).c_str());
    std::printf("gap: %s\n", fmt_sci(result.gap).c_str());
    std::printf("iterations_used: %zu\n", result.iterations_used);
    std::printf("best_basis:\n");
    for (std::size_t i = 0; i < result.best_basis.rows(); ++i) {
        std::string line;
        for (std::size_t j = 0; j < result.best_basis.cols(); ++j) {
            const cplx v = result.best_basis(i, j);
            line += '[' + fmt9(v.real()) + ", " + fmt9(v.imag()) + "] ";
        }
        if (!line.empty()) line.pop_back();
        std::printf("%s\n", line.c_str());
    }
    return 0;
}

int cmd_convex_roof(const std::string& path, const std::vector<std::size_t>& dims,
                    std::size_t ensemble, std::size_t restarts, std::size_t iterations,
                    std::uint64_t seed, double tolerance) {
    const ComplexMatrix matrix = io::read_density_file(path);
    const states::DensityOperator rho(matrix, tolerance);
    const optimize::RoofEstimate estimate =
        optimize::convex_roof_upper_bound(rho, dims[0], dims[1], ensemble, restarts,
                                          iterations, seed);

    std::printf("upper_bound: %s\n", fmt9(estimate.upper_bound).c_str());
    std::printf("restarts_used: %zu\n", estimate.restarts_used);
    std::printf("converged: %s\n", estimate.converged ? "true" : "false");
    std::printf("members: %zu\n", estimate.decomposition.size());
    for (std::size_t k = 0; k < estimate.decomposition.size(); ++k) {
        const optimize::RoofMember& member = estimate.decomposition[k];
        std::printf("member %zu weight %s ec %s\n", k, fmt9(member.weight).c_str(),
                    fmt9(pure_ec(member.state)).c_str());
    }
    return 0;
}

}  // namespace

std::vector<io::SweepRow> sweep_rows(const std::string& family, std::size_t steps) {
    if (steps < 2) throw Error(ErrorCode::BadParameters, "sweep needs at least 2 steps");
    const bool is_psi1 = family == "psi1";
    if (!is_psi1 && family != "psi2")
        throw Error(ErrorCode::BadParameters, "unknown family: " + family);

    const double hi = is_psi1 ? 1.5707963267948966 : 1.0;
    std::vector<io::SweepRow> rows;
    rows.reserve(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        const double param =
            hi * (static_cast<double>(k) / static_cast<double>(steps - 1));
        const states::PureBipartiteState psi =
            is_psi1 ? states::make_psi1(param) : states::make_psi2(param);
        const measures::MeasureReport report = measures::full_report(psi);
        rows.push_back({param, report.ec, report.i_concurrence_norm, report.entropy_norm});
    }
    return rows;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"entanglement coherence toolkit"};
    app.require_subcommand(1);

    double tolerance = 1e-10;
    std::string format = "text";
    app.add_option("--tolerance", tolerance, "validation tolerance")->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();

    std::string measure_path;
    auto* measure = app.add_subcommand("measure", "report every measure for a state file");
    measure->fallthrough();
    measure->add_option("file", measure_path, "state file")->required();

    std::string sweep_family;
    std::size_t sweep_steps = 0;
    std::string sweep_out;
    auto* sweep = app.add_subcommand("sweep", "write a family sweep as CSV");
    sweep->fallthrough();
    sweep->add_option("--family", sweep_family, "psi1 or psi2")
        ->required()
        ->check(CLI::IsMember({"psi1", "psi2"}));
    sweep->add_option("--steps", sweep_steps, "grid size including endpoints")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
    sweep->add_option("--out", sweep_out, "output CSV path")->required();

    std::size_t audit_trials = 100;
    std::size_t audit_max_dim = 4;
    std::uint64_t audit_seed = 1;
    auto* audit = app.add_subcommand("audit", "randomized identity and conjecture audit");
    audit->fallthrough();
    audit->add_option("--trials", audit_trials, "number of random states")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
    audit->add_option("--max-dim", audit_max_dim, "largest local dimension")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{2}, std::size_t{8}));
    audit->add_option("--seed", audit_seed, "rng seed")->capture_default_str();

    std::string basis_path;
    std::size_t basis_iterations = 2000;
    std::size_t basis_restarts = 8;
    std::uint64_t basis_seed = 1;
    auto* basis = app.add_subcommand("optimize-basis", "search for the max-coherence basis");
    basis->fallthrough();
    basis->add_option("file", basis_path, "density file")->required();
    basis->add_option("--iterations", basis_iterations, "pattern search pass cap")
        ->capture_default_str();
    basis->add_option("--restarts", basis_restarts, "restart count")->capture_default_str();
    basis->add_option("--seed", basis_seed, "rng seed")->capture_default_str();

    std::string roof_path;
    std::vector<std::size_t> roof_dims;
    std::size_t roof_ensemble = 0;
    std::size_t roof_restarts = 6;
    std::size_t roof_iterations = 4000;
    std::uint64_t roof_seed = 1;
    auto* roof = app.add_subcommand("convex-roof", "upper-bound the convex roof of a density");
    roof->fallthrough();
    roof->add_option("file", roof_path, "density file")->required();
    roof->add_option("--dims", roof_dims, "subsystem dims as A,B")
        ->required()
        ->delimiter(',');
    roof->add_option("--ensemble", roof_ensemble, "ensemble size (0 = rank + 2)")
        ->capture_default_str();
    roof->add_option("--restarts", roof_restarts, "restart count")->capture_default_str();
    roof->add_option("--iterations", roof_iterations, "pattern search pass cap")
        ->capture_default_str();
    roof->add_option("--seed", roof_seed, "rng seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (measure->parsed()) return cmd_measure(measure_path, format);
        if (sweep->parsed()) return cmd_sweep(sweep_family, sweep_steps, sweep_out);
        if (audit->parsed()) return cmd_audit(audit_trials, audit_max_dim, audit_seed);
        if (basis->parsed())
            return cmd_optimize_basis(basis_path, basis_iterations, basis_restarts, basis_seed,
                                      tolerance);
        if (roof->parsed()) {
            if (roof_dims.size() != 2 || roof_dims[0] == 0 || roof_dims[1] == 0) {
                std::fprintf(stderr, "error: --dims expects two positive integers A,B\n");
                return 2;
            }
            return cmd_convex_roof(roof_path, roof_dims, roof_ensemble, roof_restarts,
                                   roof_iterations, roof_seed, tolerance);
        }
    } catch (const ecoh::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const ecoh::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 2;
}

}  // namespace ecoh::cli
