#pragma once

#include <stdexcept>
#include <string>

namespace stabreg {

/// Base of every error raised by the library. `reason()` is a short
/// machine-readable tag that the CLI forwards verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string reason, const std::string& message)
        : std::runtime_error(message), reason_(std::move(reason)) {}

    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

/// Malformed or out-of-range input.
class InputError : public Error {
public:
    explicit InputError(const std::string& message, std::string reason = "input")
        : Error(std::move(reason), message) {}
};

/// A search or enumeration was asked to run above its configured size bound.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& message)
        : Error("capacity", message) {}
};

/// A verified hypothesis of an operation does not hold on the given input.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& message, std::string reason = "precondition")
        : Error(std::move(reason), message) {}
};

}  // namespace stabreg
