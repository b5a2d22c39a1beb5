#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ecoh/matrix.hpp"
#include "ecoh/states.hpp"

namespace ecoh::optimize {

struct BasisSearchResult {
    double best_value = 0.0;
    ComplexMatrix best_basis;   // columns are the basis vectors
    std::size_t iterations_used = 0;
    double analytic_target = 0.0;
    double gap = 0.0;           // analytic_target - best_value
};

struct RoofMember {
    double weight = 0.0;
    states::PureBipartiteState state;
};

struct RoofEstimate {
    double upper_bound = 0.0;
    std::vector<RoofMember> decomposition;
    std::size_t restarts_used = 0;
    bool converged = false;
};

// Pattern search over unitaries U = exp(i H(theta)) maximizing the skew
// coherence of the basis given by the columns of U. Never exceeds the
// closed-form target; the gap field reports how close it got.
BasisSearchResult maximize_skew_coherence(const states::DensityOperator& rho,
                                          std::size_t iterations = 2000,
                                          std::size_t restarts = 8,
                                          std::uint64_t seed = 0);

// Minimizes sum_k q_k ec(Psi_k) over ensemble decompositions of varrho,
// parameterized by the purification freedom: member k is the k-th column of
// sqrt(varrho) * W with W unitary of size ensemble_size, q_k its squared
// norm. ensemble_size = 0 means rank + 2. Upper bound only.
RoofEstimate convex_roof_upper_bound(const states::DensityOperator& varrho,
                                     std::size_t dim_a, std::size_t dim_b,
                                     std::size_t ensemble_size = 0,
                                     std::size_t restarts = 6,
                                     std::size_t iterations = 4000,
                                     std::uint64_t seed = 0);

}  // namespace ecoh::optimize
