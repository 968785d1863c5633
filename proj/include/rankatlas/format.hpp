// Exact decimal rendering of rationals (round-half-even) and the "p/q"
// string form used by the atlas file format. Decimals are computed from the
// integer numerator/denominator, never through floating point.
#pragma once

#include <cstdint>
#include <string>

#include "rankatlas/climb.hpp"
#include "rankatlas/rankspace.hpp"

namespace rankatlas {

// value rendered with exactly `places` fractional digits, ties to even
std::string decimal_string(const Rational& value, int places);

// "a/b" in lowest terms, or "a" when the denominator is 1
std::string rational_to_string(const Rational& value);
Rational rational_from_string(const std::string& text);  // inverse of the above

// part/total as a percentage with `places` fractional digits, e.g. "71.14"
std::string percent_string(const BigCount& part, const BigCount& total, int places = 2);

double to_double(const Rational& value);

}  // namespace rankatlas
