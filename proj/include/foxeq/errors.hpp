#pragma once

#include <stdexcept>
#include <string>

namespace foxeq {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (x <= 1, empty table, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation requested exactly at a pole of gamma or zeta.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Cancellation budget exceeded; the message carries the estimated digit loss.
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// An integration engine failed to converge within its caps.
/// Carries the best estimate obtained and the error bound attached to it.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double best, double err)
        : Error(what), best_estimate(best), error_estimate(err) {}
    double best_estimate;
    double error_estimate;
};

/// The scaled sine-kernel equation degenerates at a = 2*pi.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Imaginary residue of a contour result exceeded its tolerance.
class SymmetryError : public Error {
public:
    using Error::Error;
};

/// Zeros file could not be opened.
class IoError : public Error {
public:
    using Error::Error;
};

/// Zeros file is malformed (non-numeric line, ordering, emptiness).
class FormatError : public Error {
public:
    using Error::Error;
};

/// An ingested ordinate failed the zero certification.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A check was run without a resource (zeros table) it requires.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace foxeq
