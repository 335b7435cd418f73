#include "qboundary/errors.hpp"

namespace qboundary {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NotPSD: return "NotPSD";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::InvalidForm: return "InvalidForm";
        case ErrorCode::DegenerateLine: return "DegenerateLine";
        case ErrorCode::ImmediateBoundary: return "ImmediateBoundary";
        case ErrorCode::Unbounded: return "Unbounded";
        case ErrorCode::NotProductVector: return "NotProductVector";
        case ErrorCode::NotZeroEigenvector: return "NotZeroEigenvector";
        case ErrorCode::EpsOutOfRange: return "EpsOutOfRange";
        case ErrorCode::NotOrthonormal: return "NotOrthonormal";
        case ErrorCode::BadOrdering: return "BadOrdering";
        case ErrorCode::BadDirection: return "BadDirection";
        case ErrorCode::UnknownExperiment: return "UnknownExperiment";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace qboundary
