#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ecoh/io.hpp"

namespace ecoh::cli {

// Full command dispatch; returns the process exit code.
// 0 success, 1 audit failure, 2 usage or parse error, 3 domain error.
int run(int argc, const char* const* argv);

// Uniform parameter grid (endpoints included) over the psi1 or psi2 family.
std::vector<io::SweepRow> sweep_rows(const std::string& family, std::size_t steps);

}  // namespace ecoh::cli
