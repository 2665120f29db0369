#pragma once

#include "bv/decision.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bv {

enum class ErrorCode {
    // input / construction
    InvalidInput,
    EmptyInput,
    DimensionMismatch,
    ZeroRow,
    ZeroColumn,
    InvalidOrder,
    InvalidPath,
    CutsOutOfRange,
    NotIncreasing,
    UnrollLimit,
    Overflow,
    // semantic preconditions
    NotERS,
    NoTail,
    NotProperlyOrdered,
    DepthExhausted,
    RankOutOfBounds,
    MaxOfTower,
    MinOfTower,
    WindowTooShort,
    LevelTooLow,
    FactorBoundExceeded,
    InvalidCoefficients,
    InvalidPairs,
    LevelBeyondSpec,
    NotUniqueState,
    BaseTooSmall,
    // bugs
    SkeletonMismatch,
    InternalInvariant,
};

std::string_view to_string(ErrorCode code);

/// True for codes that indicate a violated internal invariant rather than bad input.
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<Decision> decision = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    const std::optional<Decision>& decision() const noexcept { return decision_; }

private:
    ErrorCode code_;
    std::optional<Decision> decision_;
};

}  // namespace bv
