// errors.hpp -- exception types thrown by the caqwbh library
#pragma once

#include <stdexcept>
#include <string>

namespace caqwbh {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument is outside its mathematical domain (theta, shift index, omega, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two sequences that must have equal length do not.
class SizeMismatch : public Error {
public:
    using Error::Error;
};

/// theta outside (0, pi/2), equal to pi/4 where a message coin is required,
/// or theta1 == theta2.
class InvalidTheta : public Error {
public:
    using Error::Error;
};

/// Initial amplitudes do not form a unit vector.
class InvalidAlpha : public Error {
public:
    using Error::Error;
};

/// N is not a power of two, N*k is not byte-aligned, or k is out of range.
class InvalidSize : public Error {
public:
    using Error::Error;
};

/// The init step left some position with (numerically) zero probability.
class DegenerateInit : public Error {
public:
    using Error::Error;
};

/// MAC key violates its invariants (key1 not normalized, key2 too short).
class InvalidKey : public Error {
public:
    using Error::Error;
};

/// flip/delete mutation requested on an empty message.
class EmptyMessage : public Error {
public:
    using Error::Error;
};

/// Malformed key/report/vector file.
class FormatError : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace caqwbh
