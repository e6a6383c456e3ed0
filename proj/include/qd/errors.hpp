///////////////////////////////////////////////////////////////////////////////
// errors.hpp
//
// error codes and the exception type thrown across the library
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include <stdexcept>
#include <string>

namespace qd {

enum class ErrorCode {
    DimensionMismatch,
    NonConvergedInverse,
    EmptyDomain,
    DegenerateGap,
    PoleAtCenter,
    CenterMismatch,
    CenterChainMismatch,
    OrderExceeded,
    PoleHit,
    NoConvergence,
    SingularJacobian,
    OutsideDomain,
    IllConditioned,
    URepresentationMismatch,
    SingularJacobianAtNode,
    OrderOverflow,
    SchemeVolumeMismatch,
    NotOriginFixing,
    ScheduleInfeasible,
    UnivalenceSampleFailure,
    UnsupportedDomain,
    UnknownScenario,
    SpecParseError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace qd
