#pragma once

#include <stdexcept>
#include <string>

namespace hw {

// Base class for every error this library raises on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- tree construction / queries ---------------------------------------
struct CycleDetected : Error {
    using Error::Error;
};
struct Disconnected : Error {
    using Error::Error;
};
struct SelfLoop : Error {
    using Error::Error;
};
struct DuplicateEdge : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct NotAnEdge : Error {
    using Error::Error;
};
struct TreeFormatError : Error {
    using Error::Error;
};

// --- numeric safety -----------------------------------------------------
struct Overflow : Error {
    using Error::Error;
};
struct NonIntegralAggregate : Error {
    using Error::Error;
};

// --- preconditions on derived structure ---------------------------------
struct NotHyperCentroid : Error {
    using Error::Error;
};
struct InvalidSpec : Error {
    using Error::Error;
};
struct CapExceeded : Error {
    using Error::Error;
};
struct InvalidParameters : Error {
    using Error::Error;
};
struct InvalidOrder : Error {
    using Error::Error;
};

// Raised when a structural fact that is supposed to hold unconditionally
// (centroid set size, hyper-centroid adjacency, ...) fails at runtime.
// Seeing this means a bug in this library, never bad user input.
struct InvariantViolation : Error {
    using Error::Error;
};

}  // namespace hw
