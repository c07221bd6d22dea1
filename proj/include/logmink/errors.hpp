#pragma once

#include <stdexcept>
#include <string>

namespace logmink {

// Base for everything thrown by the library, so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input: bad files, nonpositive masses,
// mismatched dimensions, unknown functional names.
struct ValidationError : Error {
    using Error::Error;
};

// Filesystem-level failure (missing file, unwritable output path).
struct IoError : Error {
    using Error::Error;
};

// An iteration failed to converge within its cap, or a computation produced
// a non-finite value.
struct NumericError : Error {
    using Error::Error;
};

// A result was computed but failed its internal consistency check by more
// than the configured tolerance (e.g. the two torsion quadratures disagree).
struct AccuracyError : Error {
    using Error::Error;
};

// A hard resource cap was hit (mesh node budget).
struct ResourceError : Error {
    using Error::Error;
};

// The input measure concentrates half or more of its mass on an antipodal
// pair, so no solution exists; carries the human-readable report.
struct SubspaceConcentrationError : ValidationError {
    using ValidationError::ValidationError;
};

}  // namespace logmink
