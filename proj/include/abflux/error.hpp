#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abflux {

/// Every failure the library can report. Each code has a stable name that
/// the CLI prints on stderr and a distinct process exit status.
enum class ErrorCode {
    FieldUndefinedOnSolenoid,
    AzimuthUndefined,
    InvalidField,
    InvalidRadius,
    StencilCrossesSolenoid,
    InvalidPath,
    PathCrossesSolenoid,
    PathNotExterior,
    PathTouchesAxis,
    WindingUnresolvable,
    InvalidQuadratureSpec,
    QuadratureNotConverged,
    StokesCrossCheckFailed,
    ZeroCharge,
    InvalidTolerance,
    InvalidGeometry,
    EmptyChargeSet,
    EmptyRange,
    AsymmetricRange,
    InvalidSpectrum,
    ParseError,
    ConfigError,
    IoError,
};

constexpr std::string_view error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::FieldUndefinedOnSolenoid: return "FieldUndefinedOnSolenoid";
    case ErrorCode::AzimuthUndefined: return "AzimuthUndefined";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::InvalidRadius: return "InvalidRadius";
    case ErrorCode::StencilCrossesSolenoid: return "StencilCrossesSolenoid";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::PathCrossesSolenoid: return "PathCrossesSolenoid";
    case ErrorCode::PathNotExterior: return "PathNotExterior";
    case ErrorCode::PathTouchesAxis: return "PathTouchesAxis";
    case ErrorCode::WindingUnresolvable: return "WindingUnresolvable";
    case ErrorCode::InvalidQuadratureSpec: return "InvalidQuadratureSpec";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::StokesCrossCheckFailed: return "StokesCrossCheckFailed";
    case ErrorCode::ZeroCharge: return "ZeroCharge";
    case ErrorCode::InvalidTolerance: return "InvalidTolerance";
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::EmptyChargeSet: return "EmptyChargeSet";
    case ErrorCode::EmptyRange: return "EmptyRange";
    case ErrorCode::AsymmetricRange: return "AsymmetricRange";
    case ErrorCode::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

/// Process exit status for a code; 0-2 are left to success and usage errors.
constexpr int exit_status(ErrorCode code) { return 10 + static_cast<int>(code); }

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace abflux
