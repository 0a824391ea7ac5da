#pragma once

#include <stdexcept>
#include <string>

namespace gapforge {

// Precondition violation: the caller handed us something malformed
// (r >= k, alphabet too small, non-coprime modulus, ...).
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& msg) : std::invalid_argument(msg) {}
};

// The input encodes a real number at a precision too low to certify the
// requested computation (decimal string too short, coefficient list exhausted).
class insufficient_precision : public std::runtime_error {
public:
    explicit insufficient_precision(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that hits a boundary or collision the theory
// assumes away (repeated orbit point, breakpoint collision, exact cell
// boundary). Reported instead of silently picking a side.
class degenerate_input : public std::runtime_error {
public:
    explicit degenerate_input(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gapforge
