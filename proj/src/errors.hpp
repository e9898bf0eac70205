#pragma once

#include <stdexcept>
#include <string>

namespace holopack {

// Stable error codes, mirrored one-to-one by the C API status values.
enum class ErrorCode : int {
    Ok = 0,
    InvalidArgument,
    ParseError,
    ZeroLift,
    ChartOverflow,
    NonpositiveScale,
    PoleAtLatticePoint,
    TruncationTooLoose,
    WindowExceeded,
    NotPeriodic,
    QuadratureDiverged,
    ConstantCurve,
    NotVanishingAtOrigin,
    StepFailed,
    ZeroOnCircle,
    DegreeZero,
    ZeroLeadingCoefficient,
    SingularMatrix,
    NodeLimit,
    IoError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace holopack
