#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homx {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments or capability violations.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Malformed graph6 or target text. `offset` is a byte offset or a line number.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t offset)
        : Error(what + " (at " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A requested computation exceeds a configured cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// The target graph is outside the regime an operation is defined for.
class RegimeError : public Error {
public:
    using Error::Error;
};

/// An ear decomposition violates the attachment rules.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// A proven structural fact failed on a concrete instance.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace homx
