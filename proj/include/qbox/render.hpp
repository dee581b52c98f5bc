#pragma once

#include <string>

#include "qbox/exactalg.hpp"

namespace qbox {

/// Decimal expansion of coefficient * pi^k to `digits` significant digits,
/// computed with a multi-precision float seeded from a 100-digit pi.
std::string decimal(const PiScaled& value, int digits = 50);
std::string decimal(const Rational& value, int digits = 50);

/// Nearest double to coefficient * pi^k.
double to_double(const PiScaled& value);

/// pi^power as a double; any integer power.
double pi_power(int power);

/// Shortest round-trip form of a double ("%.17g").
std::string format_double(double v);

}  // namespace qbox
