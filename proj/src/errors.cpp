#include "errors.hpp"

namespace holopack {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Ok: return "Ok";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ZeroLift: return "ZeroLift";
        case ErrorCode::ChartOverflow: return "ChartOverflow";
        case ErrorCode::NonpositiveScale: return "NonpositiveScale";
        case ErrorCode::PoleAtLatticePoint: return "PoleAtLatticePoint";
        case ErrorCode::TruncationTooLoose: return "TruncationTooLoose";
        case ErrorCode::WindowExceeded: return "WindowExceeded";
        case ErrorCode::NotPeriodic: return "NotPeriodic";
        case ErrorCode::QuadratureDiverged: return "QuadratureDiverged";
        case ErrorCode::ConstantCurve: return "ConstantCurve";
        case ErrorCode::NotVanishingAtOrigin: return "NotVanishingAtOrigin";
        case ErrorCode::StepFailed: return "StepFailed";
        case ErrorCode::ZeroOnCircle: return "ZeroOnCircle";
        case ErrorCode::DegreeZero: return "DegreeZero";
        case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NodeLimit: return "NodeLimit";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace holopack
