#pragma once

#include <stdexcept>
#include <string>

namespace k3twist {

// Malformed input: wrong shapes, rank mismatches, unparseable documents.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Well-formed input that violates a mathematical hypothesis of the
// requested computation (non-primitive vector, degenerate form, ...).
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

} // namespace k3twist
