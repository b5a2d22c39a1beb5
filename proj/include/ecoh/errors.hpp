#pragma once

#include <stdexcept>
#include <string>

namespace ecoh {

// Failure categories surfaced by the numerical core. The CLI maps any
// Error to exit code 3 and any ParseError to exit code 2.
enum class ErrorCode {
    NotHermitian,
    NoConvergence,
    NotPSD,
    BadShape,
    NotNormalized,
    OutOfRange,
    BadDistribution,
    NotUnitary,
    BadBasis,
    DimensionMismatch,
    BadParameters,
    BadInput,
    RankDeficit,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Malformed input text or unusable paths. Distinct from Error so the CLI
// can tell usage-level problems apart from domain-invariant violations.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace ecoh
