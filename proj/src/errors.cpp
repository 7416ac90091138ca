#include "abreu/errors.hpp"

namespace abreu {

const char* error_kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Config: return "configuration error";
    case ErrorKind::StencilIncomplete: return "stencil incomplete";
    case ErrorKind::DegenerateHessian: return "degenerate Hessian";
    case ErrorKind::NotNormalized: return "not normalized";
    case ErrorKind::SectionNotCompact: return "section not compact";
    case ErrorKind::NonConvexInput: return "input not convex";
    case ErrorKind::NonPositiveWeight: return "non-positive w";
    case ErrorKind::SingularSystem: return "linear system singular";
    case ErrorKind::LineSearchFailed: return "line search failed";
    case ErrorKind::MaxIterations: return "max iterations";
    case ErrorKind::OuterStalled: return "outer iteration stalled";
    case ErrorKind::OutOfRange: return "parameter out of range";
    case ErrorKind::NonPositiveDenominator: return "non-positive denominator";
    case ErrorKind::DiskNotContained: return "disk not contained";
    }
    return "error";
}

}  // namespace abreu
