#pragma once

#include <stdexcept>
#include <string>

namespace rlent {

// Malformed input data (bad magic, truncated payload, bad header).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A domain invariant does not hold (non-canonical runs, out-of-range position).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem / stream failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rlent
