#pragma once

#include <stdexcept>
#include <string>

namespace sparsla {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mismatched array lengths or incompatible shapes.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Index outside matrix bounds, or a size cap exceeded.
class BoundsError : public Error {
public:
    using Error::Error;
};

/// Malformed input file. Carries the 1-based line number when known.
class FormatError : public Error {
public:
    FormatError(const std::string& msg, long line = 0)
        : Error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}

    long line() const { return line_; }

private:
    long line_ = 0;
};

/// Matrix is singular to working precision (zero pivot).
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// Input violates a documented restriction (nonsymmetric matrix where
/// symmetry is required, degenerate eigenvalues, etc.).
class UnsupportedInputError : public Error {
public:
    using Error::Error;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// Communication failure in the distributed layer: timeout, epoch
/// mismatch, payload size mismatch, or a peer rank aborting.
class TransportError : public Error {
public:
    using Error::Error;
};

} // namespace sparsla
