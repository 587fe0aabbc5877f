/// @file errors.hpp
/// @brief Exception types thrown by the lensknots library.

#pragma once

#include <stdexcept>
#include <string>

namespace lensknots {

/// Base class for all library domain errors.  The CLI maps these to exit
/// code 2; anything else escaping is a bug.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A residue had no inverse (gcd with the modulus is not 1).
struct NonUnit final : Error {
    using Error::Error;
};

/// A primality-requiring operation was handed a composite (or n < 2).
struct NotPrime final : Error {
    using Error::Error;
};

/// Exact integer arithmetic left the declared 64-bit magnitude bound.
struct Overflow final : Error {
    using Error::Error;
};

/// Surgery coordinates with A*a + B*b = 0: no lens space is produced.
struct NotLensSurgery final : Error {
    using Error::Error;
};

/// Coordinates that cannot come from a primitive curve class (neither a nor
/// b is a unit mod p, or the resulting dual class is not a unit).
struct NonPrimitive final : Error {
    using Error::Error;
};

/// Family parameters outside the family's declared ranges.
struct InvalidDescriptor final : Error {
    using Error::Error;
};

/// Requested the free-group word of a family that has none (fiber families).
struct NoWordForm final : Error {
    using Error::Error;
};

/// Malformed golden/allowlist input.  `line` is 1-based.
struct ParseError final : Error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

/// A parsed (p,q) or lambda value that is not the orbit-minimal
/// representative (or not a unit mod p at all).
struct NonCanonical final : Error {
    using Error::Error;
};

}  // namespace lensknots
