#pragma once

#include <cstdint>

#include "ecoh/matrix.hpp"
#include "ecoh/rng.hpp"
#include "ecoh/states.hpp"

namespace test_helpers {

inline ecoh::ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
    ecoh::Rng rng(seed);
    ecoh::ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = rng.gaussian();
        for (std::size_t j = i + 1; j < n; ++j) {
            const ecoh::cplx v(rng.gaussian(), rng.gaussian());
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

// G G^dagger normalized to unit trace (Wishart-type random density).
inline ecoh::states::DensityOperator random_density(std::size_t n, std::uint64_t seed) {
    ecoh::Rng rng(seed);
    ecoh::ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = ecoh::cplx(rng.gaussian(), rng.gaussian());
    ecoh::ComplexMatrix h = g * g.adjoint();
    h *= ecoh::cplx(1.0 / h.trace().real());
    return ecoh::states::DensityOperator(std::move(h));
}

}  // namespace test_helpers
