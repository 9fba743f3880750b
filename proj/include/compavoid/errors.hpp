#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace compavoid {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed command line or input grammar.
struct ParseError : Error {
    using Error::Error;
};

// Well-formed but semantically invalid input.
struct ValidationError : Error {
    using Error::Error;
};

// One forbidden word occurs as a factor of another.
struct ContainmentViolation : ValidationError {
    ContainmentViolation(std::size_t outer, std::size_t inner, const std::string &what)
        : ValidationError(what), outer_index(outer), inner_index(inner) {}
    std::size_t outer_index;
    std::size_t inner_index;
};

struct DuplicateWord : ValidationError {
    using ValidationError::ValidationError;
};

struct LetterOutOfAlphabet : ValidationError {
    using ValidationError::ValidationError;
};

// Request exceeds a hard size cap (determinant dimension, enumeration bound).
struct SizeLimitExceeded : Error {
    using Error::Error;
};

struct BoundTooLarge : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// Contract violations on series operations.
struct NonTriangular : Error {
    using Error::Error;
};

struct NonUnitConstant : Error {
    using Error::Error;
};

struct BoundMismatch : Error {
    using Error::Error;
};

// A computed value broke an invariant that holds for every valid input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace compavoid
