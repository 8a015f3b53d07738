#pragma once

#include <stdexcept>
#include <string>

namespace kpath {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Oracle instance exceeds the enumeration guard.
struct SizeLimitError : std::runtime_error {
    explicit SizeLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// Zero-variance input to a correlation measure.
struct DegenerateError : std::runtime_error {
    explicit DegenerateError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace kpath
