#pragma once

#include <string>
#include <string_view>

#include "numrange/scalar_linalg.hpp"

namespace numrange {

// Whitespace-free complex literal: optional real part, optional signed
// imaginary part with a trailing 'i'. Examples: "1", "-2.5i", "3+4i",
// "1e-3-2e2i". Throws ComplexParseError with the offending position.
struct ComplexParseError : std::invalid_argument {
    size_t position;
    ComplexParseError(const std::string& msg, size_t pos)
        : std::invalid_argument(msg), position(pos) {}
};

Complex parse_complex(std::string_view text);

// Shortest form that re-parses to the same value, 17 significant digits.
std::string format_complex(Complex z);

}  // namespace numrange
