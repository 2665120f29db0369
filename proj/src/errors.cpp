#include "bv/errors.hpp"

namespace bv {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ZeroRow: return "ZeroRow";
        case ErrorCode::ZeroColumn: return "ZeroColumn";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::InvalidPath: return "InvalidPath";
        case ErrorCode::CutsOutOfRange: return "CutsOutOfRange";
        case ErrorCode::NotIncreasing: return "NotIncreasing";
        case ErrorCode::UnrollLimit: return "UnrollLimit";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::NotERS: return "NotERS";
        case ErrorCode::NoTail: return "NoTail";
        case ErrorCode::NotProperlyOrdered: return "NotProperlyOrdered";
        case ErrorCode::DepthExhausted: return "DepthExhausted";
        case ErrorCode::RankOutOfBounds: return "RankOutOfBounds";
        case ErrorCode::MaxOfTower: return "MaxOfTower";
        case ErrorCode::MinOfTower: return "MinOfTower";
        case ErrorCode::WindowTooShort: return "WindowTooShort";
        case ErrorCode::LevelTooLow: return "LevelTooLow";
        case ErrorCode::FactorBoundExceeded: return "FactorBoundExceeded";
        case ErrorCode::InvalidCoefficients: return "InvalidCoefficients";
        case ErrorCode::InvalidPairs: return "InvalidPairs";
        case ErrorCode::LevelBeyondSpec: return "LevelBeyondSpec";
        case ErrorCode::NotUniqueState: return "NotUniqueState";
        case ErrorCode::BaseTooSmall: return "BaseTooSmall";
        case ErrorCode::SkeletonMismatch: return "SkeletonMismatch";
        case ErrorCode::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

bool is_internal(ErrorCode code) {
    return code == ErrorCode::SkeletonMismatch || code == ErrorCode::InternalInvariant;
}

Error::Error(ErrorCode code, const std::string& message, std::optional<Decision> decision)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      decision_(decision) {}

}  // namespace bv
