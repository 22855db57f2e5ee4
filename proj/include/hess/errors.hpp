#pragma once

#include <stdexcept>
#include <string>

namespace hess {

enum class ErrorKind {
    UnsupportedType,
    NotARoot,
    InvalidArgs,
    InvalidHessenbergFunction,
    InvalidIdeal,
    NotSubset,
    DomainViolation,
    NonExactDivision,
    CapExceeded,
};

const char* error_kind_name(ErrorKind kind);

// Base of every library error. Callers that only need to classify
// failures (the CLI maps kinds to exit codes) inspect kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::size_t cap)
        : Error(ErrorKind::CapExceeded, what), cap_(cap) {}

    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

}  // namespace hess
