#include "qd/errors.hpp"

namespace qd {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonConvergedInverse: return "NonConvergedInverse";
        case ErrorCode::EmptyDomain: return "EmptyDomain";
        case ErrorCode::DegenerateGap: return "DegenerateGap";
        case ErrorCode::PoleAtCenter: return "PoleAtCenter";
        case ErrorCode::CenterMismatch: return "CenterMismatch";
        case ErrorCode::CenterChainMismatch: return "CenterChainMismatch";
        case ErrorCode::OrderExceeded: return "OrderExceeded";
        case ErrorCode::PoleHit: return "PoleHit";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::SingularJacobian: return "SingularJacobian";
        case ErrorCode::OutsideDomain: return "OutsideDomain";
        case ErrorCode::IllConditioned: return "IllConditioned";
        case ErrorCode::URepresentationMismatch: return "URepresentationMismatch";
        case ErrorCode::SingularJacobianAtNode: return "SingularJacobianAtNode";
        case ErrorCode::OrderOverflow: return "OrderOverflow";
        case ErrorCode::SchemeVolumeMismatch: return "SchemeVolumeMismatch";
        case ErrorCode::NotOriginFixing: return "NotOriginFixing";
        case ErrorCode::ScheduleInfeasible: return "ScheduleInfeasible";
        case ErrorCode::UnivalenceSampleFailure: return "UnivalenceSampleFailure";
        case ErrorCode::UnsupportedDomain: return "UnsupportedDomain";
        case ErrorCode::UnknownScenario: return "UnknownScenario";
        case ErrorCode::SpecParseError: return "SpecParseError";
    }
    return "UnknownError";
}

} // namespace qd
