#pragma once

#include <stdexcept>
#include <string>

namespace virateich {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Violated caller contract (invalid input data).
struct PreconditionError : Error {
    using Error::Error;
};

/// A numerical procedure failed to reach its internal tolerance.
struct NumericalError : Error {
    using Error::Error;
};

/// Malformed structured input; `path` names the offending field.
struct SchemaError : Error {
    std::string path;
    SchemaError(std::string p, const std::string& msg)
        : Error(p + ": " + msg), path(std::move(p)) {}
};

} // namespace virateich
