#include "crosscap/error.hpp"

namespace crosscap {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::MalformedCode: return "MalformedCode";
        case ErrorKind::BadLabels: return "BadLabels";
        case ErrorKind::NonPlanar: return "NonPlanar";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::VariableMismatch: return "VariableMismatch";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NotAdequate: return "NotAdequate";
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::NotAlternating: return "NotAlternating";
        case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorKind::BadTwistCount: return "BadTwistCount";
        case ErrorKind::NotAKnot: return "NotAKnot";
        case ErrorKind::MixedSigns: return "MixedSigns";
        case ErrorKind::NotPlanar: return "NotPlanar";
        case ErrorKind::NotTrivalent: return "NotTrivalent";
        case ErrorKind::MissingFile: return "MissingFile";
        case ErrorKind::BadHeader: return "BadHeader";
        case ErrorKind::MissingKnots: return "MissingKnots";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace crosscap
