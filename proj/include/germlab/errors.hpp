#pragma once

#include <stdexcept>
#include <string>

namespace germlab {

// Base for all germlab failures. The CLI maps categories onto exit codes:
// validation -> 2, scientific bound violation -> 3, numerical failure -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
    using Error::Error;
};

// Gradient magnitude below tolerance; signals a singular point.
struct ZeroGradient : Error {
    using Error::Error;
};

// |<u1,u2>| below tolerance; plane-to-plane projection degenerates.
struct OrthogonalPlanes : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct SamplingStalled : Error {
    using Error::Error;
};

struct DisconnectedGraph : Error {
    using Error::Error;
};

struct Unreachable : Error {
    using Error::Error;
};

struct DegenerateFit : Error {
    using Error::Error;
};

struct OnBranchLocus : Error {
    using Error::Error;
};

struct OffSurface : Error {
    using Error::Error;
};

// arg(x) undefined at x = 0 with u != 0.
struct UndefinedArgument : Error {
    using Error::Error;
};

struct NoSignChange : Error {
    using Error::Error;
};

struct InsufficientSamples : Error {
    using Error::Error;
};

}  // namespace germlab
