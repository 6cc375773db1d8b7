#pragma once

#include <stdexcept>
#include <string>

namespace ncbgg {

// Thrown on malformed input files / config values.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation's precondition fails (dimension mismatch,
// non-Frobenius algebra, point off the scheme, ...).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a truncation window is too small for the requested
// computation.  The message names the range that would suffice.
struct window_error : std::runtime_error {
    explicit window_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ncbgg
