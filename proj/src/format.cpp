#include "spectral_bounds/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace spectral_bounds {

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

double round_to_15_digits(double value) {
  if (!std::isfinite(value)) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return std::strtod(buf, nullptr);
}

}  // namespace spectral_bounds
