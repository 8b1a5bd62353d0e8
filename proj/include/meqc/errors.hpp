#pragma once

#include <stdexcept>
#include <string>

namespace meqc {

// Malformed input text or files. The CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a configured exhaustive-search limit. CLI exit code 3.
struct TooLargeError : std::runtime_error {
    explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace meqc
