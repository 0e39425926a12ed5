#pragma once

#include <stdexcept>
#include <string>

namespace trigonal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed literal or argument outside an operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Inputs for which the requested quantity does not exist (gcd(0, 0), order of zero, ...).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// Curve parameters outside the base: coincident u_i, or u_i^3 = 1.
class InvalidParameters : public Error {
public:
    using Error::Error;
};

/// The zero tangent vector was passed where a nonzero one is required.
class ZeroTangent : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed (kernel dimension, basis independence, ...).
class StructuralError : public Error {
public:
    using Error::Error;
};

}  // namespace trigonal
