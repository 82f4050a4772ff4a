#pragma once

#include <optional>

namespace spectral_bounds {

/// Gamma function for real x > 0. Throws std::domain_error for x <= 0.
/// Overflows to +inf above x ~ 171.6; use log_gamma there.
double gamma(double x);

/// ln Gamma(x) for real x > 0.
double log_gamma(double x);

/// Volume of the unit ball in R^n, pi^{n/2} / Gamma(1 + n/2).
double unit_ball_volume(int n);

/// The Gamma-dependent product appearing in c1(n) for n >= 3:
///   (1 - q)^{n-1} (2 - q),  q = sqrt(n+2) / (8 sqrt(n) Gamma(1+n/2)^{2/n}).
/// Stays finite for n up to at least 1e5 (evaluated through log_gamma).
double stirling_factor(int n);

/// Improvement constant of the Riesz-mean bound: 157/480 for n = 2,
/// 5n(n+2)/96 * stirling_factor(n) for n >= 3.
double c1(int n);

/// omega(n) |Omega| / (2 pi)^n, the leading Weyl coefficient.
double weyl_coefficient(int n, double volume);

struct DimensionConstants {
  int n = 0;
  double omega_n = 0.0;
  double gamma_half = 0.0;       // Gamma(1 + n/2); +inf once it overflows
  double log_gamma_half = 0.0;
  double c1 = 0.0;
  std::optional<double> stirling_factor;  // absent for n = 2
};

DimensionConstants dimension_constants(int n);

}  // namespace spectral_bounds
