#pragma once

#include <stdexcept>
#include <string>

namespace lpp {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live in rings with different variable counts.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A degreewise construction did not stabilize below its degree cap, or a
// caller passed a cap that cannot certify the requested result.
class CapError : public Error {
public:
    using Error::Error;
};

// A Hilbert function cannot be realized by the requested kind of ideal.
class InfeasibleHilbertFunction : public Error {
public:
    using Error::Error;
};

// A certificate that the theory guarantees was violated. Always indicates a
// bug in the implementation, never bad input.
class CertificateFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column)
    {
    }

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace lpp
