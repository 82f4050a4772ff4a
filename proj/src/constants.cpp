#include "spectral_bounds/constants.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spectral_bounds {

namespace {

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Series part A_g(z) of the Lanczos approximation for Gamma(z + 1).
double lanczos_sum(double z) {
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i)
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  return sum;
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0))
    throw std::domain_error(std::string(what) + ": argument must be > 0, got " +
                            std::to_string(x));
}

}  // namespace

double gamma(double x) {
  require_positive(x, "gamma");
  if (x < 0.5) {
    // Reflection keeps the Lanczos sum in its accurate range.
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
  }
  if (x > 171.7) return std::numeric_limits<double>::infinity();
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  // Split the power to delay overflow near the top of the range.
  const double half_pow = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_pow * (half_pow * std::exp(-t)) *
         lanczos_sum(z);
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x < 0.5) {
    return std::log(std::numbers::pi / std::abs(std::sin(std::numbers::pi * x))) -
           log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

double unit_ball_volume(int n) {
  if (n < 1) throw std::domain_error("unit_ball_volume: n must be >= 1");
  const double half = 0.5 * n;
  return std::exp(half * std::log(std::numbers::pi) - log_gamma(1.0 + half));
}

double stirling_factor(int n) {
  if (n < 3) throw std::domain_error("stirling_factor: n must be >= 3");
  const double nd = n;
  const double gamma_pow = std::exp(2.0 / nd * log_gamma(1.0 + 0.5 * nd));
  const double q = std::sqrt(nd + 2.0) / (8.0 * std::sqrt(nd) * gamma_pow);
  return std::exp((nd - 1.0) * std::log1p(-q)) * (2.0 - q);
}

double c1(int n) {
  if (n < 2) throw std::domain_error("c1: n must be >= 2");
  if (n == 2) return 157.0 / 480.0;
  const double nd = n;
  return 5.0 * nd * (nd + 2.0) / 96.0 * stirling_factor(n);
}

double weyl_coefficient(int n, double volume) {
  return unit_ball_volume(n) * volume * std::pow(2.0 * std::numbers::pi, -n);
}

DimensionConstants dimension_constants(int n) {
  if (n < 2) throw std::domain_error("dimension_constants: n must be >= 2");
  DimensionConstants dc;
  dc.n = n;
  dc.omega_n = unit_ball_volume(n);
  dc.log_gamma_half = log_gamma(1.0 + 0.5 * n);
  dc.gamma_half = gamma(1.0 + 0.5 * n);
  dc.c1 = c1(n);
  if (n >= 3) dc.stirling_factor = stirling_factor(n);
  return dc;
}

}  // namespace spectral_bounds
