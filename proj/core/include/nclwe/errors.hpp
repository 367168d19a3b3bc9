#pragma once

#include <stdexcept>
#include <string>

namespace nclwe {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParams : Error {
    using Error::Error;
};

struct ParamsTooLarge : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct ModulusMismatch : Error {
    using Error::Error;
};

struct EmptySubset : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// An element fell outside the cycle a dlog was requested in. During
// decryption this signals a structural anomaly and is surfaced, never
// silently corrected.
struct NotInCycle : Error {
    using Error::Error;
};

struct NotInSubgroup : Error {
    using Error::Error;
};

struct DlogFailure : Error {
    using Error::Error;
};

struct SearchExhausted : Error {
    using Error::Error;
};

struct EmptySample : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

}  // namespace nclwe
