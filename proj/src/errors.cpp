#include "ecoh/errors.hpp"

namespace ecoh {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::NotPSD: return "NotPSD";
        case ErrorCode::BadShape: return "BadShape";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::BadDistribution: return "BadDistribution";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::BadBasis: return "BadBasis";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::RankDeficit: return "RankDeficit";
    }
    return "UnknownError";
}

}  // namespace ecoh
