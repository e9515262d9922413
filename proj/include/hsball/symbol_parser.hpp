#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hsball/series.hpp"

namespace hsball {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Parses a polynomial expression in z (n = 1, alias z1) or z1..zn with
/// complex coefficients: +, -, *, ^ with nonnegative integer exponents,
/// parentheses, the imaginary unit i (also as a numeric suffix, e.g. 0.5i),
/// and division by nonzero constants. The result carries its exact degree as
/// truncation degree.
TruncSeries parse_symbol(std::string_view text, int n);

/// Parses a constant complex expression such as "0.3", "-1/2", "0.4+0.1i".
Complex parse_complex(std::string_view text);

}  // namespace hsball
