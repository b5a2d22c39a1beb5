#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ecoh/matrix.hpp"
#include "ecoh/states.hpp"

namespace ecoh::io {

// State files are JSON: {"dims": [da, db], "amplitudes": [[re, im], ...]}
// with amplitudes row-major over (i*db + j). Density files are
// {"dim": n, "matrix": [[re, im], ...]} with n*n row-major entries.
// Malformed documents raise ParseError; structurally valid documents that
// violate a physical invariant (norm, hermiticity, ...) raise Error.

states::PureBipartiteState read_state_file(const std::string& path);
ComplexMatrix read_density_file(const std::string& path);

void write_state_file(const std::string& path, const states::PureBipartiteState& psi);
void write_density_file(const std::string& path, const ComplexMatrix& matrix);

// Fixed-point with `digits` decimals, no exponent, "-0" normalized to "0".
std::string format_fixed(double value, int digits = 9);

struct SweepRow {
    double param = 0.0;
    double ec = 0.0;
    double iconc_norm = 0.0;
    double entropy_norm = 0.0;
};

// Header plus one line per row, 9-decimal fixed columns, LF endings.
std::string sweep_csv(const std::vector<SweepRow>& rows);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace ecoh::io
