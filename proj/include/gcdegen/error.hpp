#pragma once

#include <stdexcept>
#include <string>

namespace gcdegen {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: not a permutation, shape mismatch, index out of range.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A desk-scale enumeration limit would be exceeded.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

/// The hypothesis of a checked lemma does not hold for the given input.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

} // namespace gcdegen
