#include "mufold/errors.hpp"

namespace mufold {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::NotSolvable: return "NotSolvable";
        case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
        case ErrorCode::KTooSmall: return "KTooSmall";
        case ErrorCode::KTooLarge: return "KTooLarge";
        case ErrorCode::PrimeNeedsK2: return "PrimeNeedsK2";
        case ErrorCode::NotPrimitive: return "NotPrimitive";
        case ErrorCode::SharedBranch: return "SharedBranch";
        case ErrorCode::NonIsolated: return "NonIsolated";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::NonInteger: return "NonInteger";
        case ErrorCode::InfiniteCrossCaps: return "InfiniteCrossCaps";
        case ErrorCode::IdenticallyZero: return "IdenticallyZero";
        case ErrorCode::NotQuasihomogeneous: return "NotQuasihomogeneous";
        case ErrorCode::UnhandledCase: return "UnhandledCase";
        case ErrorCode::HypothesisFailed: return "HypothesisFailed";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    }
    return "Unknown";
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError:
        case ErrorCode::UnknownVariable:
            return 2;
        case ErrorCode::UnhandledCase:
            return 4;
        case ErrorCode::TruncationTooSmall:
        case ErrorCode::NoConvergence:
            return 5;
        default:
            return 3;
    }
}

} // namespace mufold
