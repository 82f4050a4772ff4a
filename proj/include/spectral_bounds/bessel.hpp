#pragma once

#include <vector>

namespace spectral_bounds {

struct BesselValue {
  double value = 0.0;       // J_m(x)
  double derivative = 0.0;  // J'_m(x)
};

/// J_m(x) and J'_m(x) for 0 <= m <= 200, 0 <= x <= 1e4.
/// Throws std::domain_error outside that range.
BesselValue bessel_eval(int m, double x);

/// Spherical Bessel j_l(x) and j_l'(x) for l >= 0, 0 <= x <= 1e4.
BesselValue spherical_bessel_eval(int l, double x);

enum class ZeroKind { Function, Derivative, Spherical };

/// Increasing positive zeros of J_m (Function), J'_m (Derivative) or j_l
/// (Spherical) in (0, x_max]. The trivial zero of J'_0 at the origin is not
/// listed.
struct BesselZeroTable {
  int order = 0;
  ZeroKind kind = ZeroKind::Function;
  double x_max = 0.0;
  std::vector<double> zeros;
};

BesselZeroTable bessel_zeros(int m, ZeroKind kind, double x_max);

namespace detail {

/// J_0(x) .. J_{max_order}(x) by normalized backward recurrence (power
/// series for x <= 1). No range checks.
std::vector<double> cylinder_bessel_orders(int max_order, double x);

/// j_0(x) .. j_{max_order}(x), same scheme.
std::vector<double> spherical_bessel_orders(int max_order, double x);

}  // namespace detail

}  // namespace spectral_bounds
