#pragma once

#include <stdexcept>
#include <string>

namespace asd {

/// Invalid geometry, plan, or configuration input.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed file content (message carries the offending position or field).
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Filesystem failure: missing file, unreadable path, failed rename.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace asd
