#pragma once

#include <string_view>

#include "wco/series.hpp"

namespace wco {

/// Expands a symbol expression over {z, complex constants, + - * / ^,
/// parentheses} into a truncated series, e.g. "2z/(1-z)" or "z^2" or
/// "(1+0.5i)*z".  Juxtaposition multiplies ("2z", "z(1-z)"); "^" takes a
/// nonnegative integer exponent; "/" divides through series reciprocal and
/// requires a divisor not vanishing at 0.  Throws Error(ParseError).
TruncatedSeries parse_series(std::string_view text, std::size_t trunc_degree);

/// Parses a complex scalar in the CLI format "re", "rei", "re+imi", "re-imi"
/// (e.g. "0.3", "1.5i", "0.5-0.25i").  Throws Error(ParseError).
Complex parse_complex(std::string_view text);

/// Formats a complex scalar in the same "re+imi" format, 17 significant digits.
std::string format_complex(Complex value);

}  // namespace wco
