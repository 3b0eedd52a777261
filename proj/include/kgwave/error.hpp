#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kgwave {

enum class ErrorCode {
    NonPositiveParameter,
    OrderingViolation,
    NonFiniteParameter,
    DegenerateSpeeds,
    OverstrongCoupling,
    BranchPointProximity,
    BranchTrackingFailure,
    ExtremumNotFound,
    NoConvergence,
    DegenerateCurvature,
    WrongSignCurvature,
    OutsideWedge,
    OutsideFarZone,
    UnknownLabel,
    InvalidArgument,
    Io,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::OrderingViolation: return "OrderingViolation";
    case ErrorCode::NonFiniteParameter: return "NonFiniteParameter";
    case ErrorCode::DegenerateSpeeds: return "DegenerateSpeeds";
    case ErrorCode::OverstrongCoupling: return "OverstrongCoupling";
    case ErrorCode::BranchPointProximity: return "BranchPointProximity";
    case ErrorCode::BranchTrackingFailure: return "BranchTrackingFailure";
    case ErrorCode::ExtremumNotFound: return "ExtremumNotFound";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateCurvature: return "DegenerateCurvature";
    case ErrorCode::WrongSignCurvature: return "WrongSignCurvature";
    case ErrorCode::OutsideWedge: return "OutsideWedge";
    case ErrorCode::OutsideFarZone: return "OutsideFarZone";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace kgwave
