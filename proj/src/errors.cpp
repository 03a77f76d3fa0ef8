#include "arcshare/errors.hpp"

namespace arcshare {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::SpecMismatch: return "SpecMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::ZeroVector: return "ZeroVector";
        case Errc::TooFewPoints: return "TooFewPoints";
        case Errc::BadDimension: return "BadDimension";
        case Errc::ZeroColumn: return "ZeroColumn";
        case Errc::BadColumnIndex: return "BadColumnIndex";
        case Errc::BadIndex: return "BadIndex";
        case Errc::BadThreshold: return "BadThreshold";
        case Errc::NotAPartition: return "NotAPartition";
        case Errc::Degenerate: return "Degenerate";
        case Errc::EmptyUpper: return "EmptyUpper";
        case Errc::TooLarge: return "TooLarge";
        case Errc::SizeMismatch: return "SizeMismatch";
        case Errc::UnverifiedScheme: return "UnverifiedScheme";
        case Errc::InconsistentShares: return "InconsistentShares";
        case Errc::UnsupportedOrder: return "UnsupportedOrder";
        case Errc::ParityMismatch: return "ParityMismatch";
        case Errc::NotAnArc: return "NotAnArc";
        case Errc::NoExternalLine: return "NoExternalLine";
        case Errc::VerificationFailed: return "VerificationFailed";
        case Errc::BadInput: return "BadInput";
    }
    return "Unknown";
}

} // namespace arcshare
