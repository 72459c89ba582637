#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "fourvec/fourvector.hpp"

namespace fourvec {

/// Parses "(c0, c1, c2, c3)" where each c is `real`, `realI`, or
/// `real(+|-)realI` with decimal reals and the letter i. Whitespace between
/// tokens is ignored. Throws ParseError.
Fourvectorcd parse_fourvector(std::string_view text);

/// Parses a single complex literal with the same grammar.
Complex parse_complex(std::string_view text);

/// Shortest %g rendering at the given significant digits (1..17): "3",
/// "-2i", "0.5-1.25i". Negative zero prints as 0.
std::string format_complex(const Complex& c, int precision = 17);

/// "(t, x, y, z)"; parse_fourvector(format_fourvector(a, 17)) == a.
std::string format_fourvector(const Fourvectorcd& a, int precision = 17);

/// {"t": [re, im], "x": [re, im], "y": [re, im], "z": [re, im]}
nlohmann::json to_json(const Fourvectorcd& a);
Fourvectorcd fourvector_from_json(const nlohmann::json& j);

}  // namespace fourvec
