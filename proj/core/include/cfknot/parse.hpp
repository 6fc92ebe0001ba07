#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <cfknot/curves.hpp>
#include <cfknot/integer.hpp>
#include <cfknot/rational.hpp>

namespace cfknot {

/// Signed decimal integer. Throws ParseError naming the offending token.
Int parse_integer(std::string_view token);

/// "m/n" or a bare integer "m" (meaning m/1).
ProjectiveRational parse_rational(std::string_view token);

/// Comma- or whitespace-separated integers; the empty string is the empty
/// list.
std::vector<Int> parse_coefficients(std::string_view text);

/// "a", "b", or a slope "m/n".
CurveClass parse_curve(std::string_view token);

/// Letters of the form <curve>^<exponent> separated by commas or
/// whitespace, e.g. "b^-3 a^2 b^-5". Letters compose right to left.
TwistWord parse_twist_word(std::string_view text);

}  // namespace cfknot
