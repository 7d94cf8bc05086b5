#pragma once

#include <stdexcept>

namespace posort {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VertexOutOfRange : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct CycleDetected : Error { using Error::Error; };

struct InvalidPermutation : Error { using Error::Error; };
struct NotAnExtension : Error { using Error::Error; };
struct SameElement : Error { using Error::Error; };

struct ElementAbsent : Error { using Error::Error; };
struct DuplicateElement : Error { using Error::Error; };
struct FingerNotBefore : Error { using Error::Error; };

struct TooLarge : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };

// Raised when a structure's self-check fails. Always indicates a bug.
struct InternalInvariantViolation : Error { using Error::Error; };

}  // namespace posort
