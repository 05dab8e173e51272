#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homeo {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates a documented invariant (nonpositive scale factor,
/// bump parameters leaving the unit disk, delta outside [0, eta], ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation left the numerically representable regime, e.g. a disk
/// point reached modulus >= 1 inside a disk-to-plane transport.
class EvalError : public Error {
public:
    using Error::Error;
};

/// No Lipschitz bound is available for the requested map and region.
class NoBoundError : public Error {
public:
    using Error::Error;
};

/// A certificate computation terminated without reaching a verdict.
class InconclusiveError : public Error {
public:
    using Error::Error;
};

/// Syntax error in the expression grammar; carries the byte offset of the
/// offending position and a description of what was expected there.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::string expected, std::string got)
        : Error("parse error at byte " + std::to_string(offset) + ": expected " + expected +
                ", got " + got),
          offset_(offset),
          expected_(std::move(expected)),
          got_(std::move(got)) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }
    const std::string& got() const { return got_; }

private:
    std::size_t offset_;
    std::string expected_;
    std::string got_;
};

} // namespace homeo
