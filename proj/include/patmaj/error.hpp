#pragma once

#include <stdexcept>
#include <string>

namespace patmaj {

// Root of every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

// Text that could not be parsed; carries the 1-based line when known.
class ParseError : public InvalidInput {
public:
    ParseError(const std::string& what, int line = 0)
        : InvalidInput(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// A search bound, node budget, or integer width was exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

// Pattern outside the domain of an operation (e.g. increasing patterns for the injection).
class UnsupportedPattern : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

// Two computations that must agree did not.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

}  // namespace patmaj
