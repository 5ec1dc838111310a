#pragma once

#include <stdexcept>
#include <string>

namespace paley {

// Bad input: an argument violates a documented precondition. The CLI maps
// this to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// An exact enumeration would exceed its configured cap. Callers should switch
// to the sampled variant of the operation.
class CapExceeded : public ValidationError {
public:
    explicit CapExceeded(const std::string& what) : ValidationError(what) {}
};

} // namespace paley
