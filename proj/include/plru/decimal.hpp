#pragma once

#include <string>

#include "plru/rational.hpp"

namespace plru {

/// Positional decimal rendering rounded half-to-even to the given number of
/// significant digits, trailing zeros removed: 1/2 -> "0.5", 1/3 ->
/// "0.33333333333333333333", 0 -> "0".
std::string to_decimal(const Rational& value, int significant_digits = 20);

} // namespace plru
