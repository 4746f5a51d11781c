#pragma once

#include <stdexcept>

namespace metafib {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed spec text: bad token, unknown preset, trailing garbage.
struct ParseError : Error { using Error::Error; };
/// Homogeneous parameter list whose length is not an even, positive count.
struct ArityError : ParseError { using ParseError::ParseError; };
/// Spec that parses but violates a domain invariant (empty or nonpositive
/// initial conditions, k < 1, negative parameters).
struct ValidationError : ParseError { using ParseError::ParseError; };

struct ArgumentError : Error { using Error::Error; };
/// Composition stepped outside the computed range.
struct RangeError : Error { using Error::Error; };
/// Operation applied to a table in the wrong state (e.g. extending a
/// terminated table).
struct StateError : Error { using Error::Error; };
/// Corrupt or incompatible cache file.
struct FormatError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
/// 64-bit overflow while accumulating sequence values.
struct OverflowError : Error { using Error::Error; };

}  // namespace metafib
