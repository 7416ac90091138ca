#pragma once

#include <stdexcept>
#include <string>

namespace abreu {

enum class ErrorKind {
    InvalidArgument,
    Config,
    StencilIncomplete,
    DegenerateHessian,
    NotNormalized,
    SectionNotCompact,
    NonConvexInput,
    NonPositiveWeight,
    SingularSystem,
    LineSearchFailed,
    MaxIterations,
    OuterStalled,
    OutOfRange,
    NonPositiveDenominator,
    DiskNotContained,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& module, const std::string& what)
        : std::runtime_error(module + ": " + error_kind_name(kind) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace abreu
