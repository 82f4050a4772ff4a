#pragma once

#include <string>

namespace spectral_bounds {

/// Decimal with 15 significant digits ("%.15g").
std::string format_real(double value);

/// Rounds to the nearest double of a 15-significant-digit decimal, so JSON
/// writers that emit the shortest round-trip form print at most 15 digits.
double round_to_15_digits(double value);

}  // namespace spectral_bounds
