#pragma once

#include <stdexcept>
#include <string>

namespace permident {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation requiring a square matrix was given a rectangular one.
struct NotSquareError : Error {
    using Error::Error;
};

/// A negative Hadamard power hit a zero entry.
struct ZeroEntryError : Error {
    using Error::Error;
};

/// Index sets with mismatched sizes, duplicates, or out-of-range entries.
struct BadIndexSetError : Error {
    using Error::Error;
};

/// The matrix has rank above 2, outside the scope of the rank-2 machinery.
struct RankTooHighError : Error {
    using Error::Error;
};

/// The input exceeds an engine's size guard.
struct TooLargeError : Error {
    using Error::Error;
};

/// Two vectors that must share a length do not.
struct LengthMismatchError : Error {
    using Error::Error;
};

/// det of the (n-1)-st Hadamard power vanishes; the permanent cannot be
/// recovered from the determinantal identity.
struct DegenerateDenominatorError : Error {
    using Error::Error;
};

/// k outside [0, n] for a Q-matrix.
struct BadKError : Error {
    using Error::Error;
};

/// Matrix product dimensions do not line up.
struct DimensionMismatchError : Error {
    using Error::Error;
};

/// A constrained random sampler ran out of retries.
struct ExhaustedResamplingError : Error {
    using Error::Error;
};

/// Malformed text input (rational, vector, or matrix syntax).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace permident
