#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glovekit {

// Base class for all domain errors thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TooFewSamples : public Error {
public:
    using Error::Error;
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class ProtocolViolation : public Error {
public:
    using Error::Error;
};

class UnknownToken : public Error {
public:
    using Error::Error;
};

class InvalidRingSize : public Error {
public:
    using Error::Error;
};

class TooFewRings : public Error {
public:
    using Error::Error;
};

class MissingPhase : public Error {
public:
    using Error::Error;
};

class NonPositiveInput : public Error {
public:
    using Error::Error;
};

class EmptyGrid : public Error {
public:
    using Error::Error;
};

class EmptyDataset : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

class InvalidRotation : public Error {
public:
    using Error::Error;
};

// Carries the 1-based line number of the offending row.
class MalformedRow : public Error {
public:
    MalformedRow(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace glovekit
