#include "sturmion/error.hpp"

namespace sturmion {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NonMonic: return "NonMonic";
        case ErrorKind::DegreeGap: return "DegreeGap";
        case ErrorKind::ZeroRemainder: return "ZeroRemainder";
        case ErrorKind::NonPositiveU: return "NonPositiveU";
        case ErrorKind::EndpointIsRoot: return "EndpointIsRoot";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NodeMismatch: return "NodeMismatch";
        case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorKind::InsufficientMoments: return "InsufficientMoments";
        case ErrorKind::PoleHit: return "PoleHit";
        case ErrorKind::DegenerateGrid: return "DegenerateGrid";
        case ErrorKind::NotAClassicalGrid: return "NotAClassicalGrid";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::DenominatorZero: return "DenominatorZero";
        case ErrorKind::PivotZero: return "PivotZero";
        case ErrorKind::ZeroPhi: return "ZeroPhi";
        case ErrorKind::ZeroF: return "ZeroF";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace sturmion
