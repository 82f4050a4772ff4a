#include "spectral_bounds/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "spectral_bounds/constants.hpp"
#include "spectral_bounds/roots.hpp"

namespace spectral_bounds {

namespace {

constexpr double kSeriesLimit = 1.0;
constexpr double kMaxArgument = 1e4;
constexpr int kMaxCylinderOrder = 200;

// Start index for backward recurrence, well past the transition region.
int recurrence_start(int max_order, double x) {
  const int top = std::max(max_order + 1, static_cast<int>(std::ceil(x)));
  int start = top + 20 + static_cast<int>(std::sqrt(40.0 * top));
  if (start % 2) ++start;
  return start;
}

// J_nu(x) for small x by the ascending series.
double cylinder_series(double nu, double x) {
  const double half = 0.5 * x;
  double term = std::exp(nu * std::log(half) - log_gamma(nu + 1.0));
  double sum = term;
  const double q = -half * half;
  for (int k = 0; k < 60; ++k) {
    term *= q / ((k + 1.0) * (k + 1.0 + nu));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// j_l(x) for small x by the ascending series.
double spherical_series(int l, double x) {
  // x^l / (2l+1)!!, with (2l+1)!! = Gamma(2l+2) / (2^l Gamma(l+1))
  const double log_double_factorial =
      log_gamma(2.0 * l + 2.0) - l * std::log(2.0) - log_gamma(l + 1.0);
  double term = std::exp(l * std::log(x) - log_double_factorial);
  double sum = term;
  const double q = -0.5 * x * x;
  for (int k = 0; k < 60; ++k) {
    term *= q / ((k + 1.0) * (2.0 * l + 2.0 * k + 3.0));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

void check_argument(double x, const char* what) {
  if (!(x >= 0.0) || x > kMaxArgument)
    throw std::domain_error(std::string(what) + ": x must lie in [0, 1e4]");
}

}  // namespace

namespace detail {

std::vector<double> cylinder_bessel_orders(int max_order, double x) {
  std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  if (x <= kSeriesLimit) {
    for (int m = 0; m <= max_order; ++m) out[m] = cylinder_series(m, x);
    return out;
  }
  // Backward recurrence J_{k-1} = (2k/x) J_k - J_{k+1}, normalized with
  // J_0 + 2 sum_{k>=1} J_{2k} = 1.
  const int start = recurrence_start(max_order, x);
  double above = 0.0;
  double current = 1e-30;
  double norm = 0.0;
  for (int k = start; k >= 1; --k) {
    if (k <= max_order) out[k] = current;
    if (k % 2 == 0) norm += 2.0 * current;
    const double below = (2.0 * k / x) * current - above;
    above = current;
    current = below;
    if (std::abs(current) > 1e200) {
      current *= 1e-200;
      above *= 1e-200;
      norm *= 1e-200;
      for (int i = std::max(k, 1); i <= max_order; ++i) out[i] *= 1e-200;
    }
  }
  out[0] = current;
  norm += current;
  for (double& v : out) v /= norm;
  return out;
}

std::vector<double> spherical_bessel_orders(int max_order, double x) {
  const int stored = std::max(max_order, 1);
  std::vector<double> out(static_cast<std::size_t>(stored) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
  } else if (x <= kSeriesLimit) {
    for (int l = 0; l <= stored; ++l) out[l] = spherical_series(l, x);
  } else {
    // Backward recurrence j_{l-1} = ((2l+1)/x) j_l - j_{l+1}, normalized
    // with sum (2l+1) j_l^2 = 1 and signed against the closed forms of j_0, j_1.
    const int start = recurrence_start(stored, x);
    double above = 0.0;
    double current = 1e-30;
    double norm_sq = 0.0;
    for (int l = start; l >= 1; --l) {
      if (l <= stored) out[l] = current;
      norm_sq += (2.0 * l + 1.0) * current * current;
      const double below = ((2.0 * l + 1.0) / x) * current - above;
      above = current;
      current = below;
      if (std::abs(current) > 1e100) {
        current *= 1e-100;
        above *= 1e-100;
        norm_sq *= 1e-200;
        for (int i = std::max(l, 1); i <= stored; ++i) out[i] *= 1e-100;
      }
    }
    out[0] = current;
    norm_sq += current * current;
    double scale = 1.0 / std::sqrt(norm_sq);
    const double j0 = std::sin(x) / x;
    const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
    const bool use_j0 = std::abs(j0) >= std::abs(j1);
    const double reference = use_j0 ? j0 : j1;
    const double candidate = use_j0 ? out[0] : out[1];
    if ((reference < 0.0) != (candidate < 0.0)) scale = -scale;
    for (double& v : out) v *= scale;
  }
  out.resize(static_cast<std::size_t>(max_order) + 1);
  return out;
}

}  // namespace detail

namespace {

BesselValue cylinder_unchecked(int m, double x) {
  const auto j = detail::cylinder_bessel_orders(m + 1, x);
  const double deriv = m == 0 ? -j[1] : 0.5 * (j[m - 1] - j[m + 1]);
  return {j[m], deriv};
}

BesselValue spherical_unchecked(int l, double x) {
  const auto j = detail::spherical_bessel_orders(l + 1, x);
  const double deriv =
      l == 0 ? -j[1] : (l * j[l - 1] - (l + 1.0) * j[l + 1]) / (2.0 * l + 1.0);
  return {j[l], deriv};
}

}  // namespace

BesselValue bessel_eval(int m, double x) {
  if (m < 0 || m > kMaxCylinderOrder)
    throw std::domain_error("bessel_eval: order must lie in [0, 200]");
  check_argument(x, "bessel_eval");
  return cylinder_unchecked(m, x);
}

BesselValue spherical_bessel_eval(int l, double x) {
  if (l < 0) throw std::domain_error("spherical_bessel_eval: order must be >= 0");
  check_argument(x, "spherical_bessel_eval");
  return spherical_unchecked(l, x);
}

BesselZeroTable bessel_zeros(int m, ZeroKind kind, double x_max) {
  if (m < 0) throw std::domain_error("bessel_zeros: order must be >= 0");
  if (!(x_max <= kMaxArgument)) throw std::domain_error("bessel_zeros: x_max must be <= 1e4");
  BesselZeroTable table{m, kind, x_max, {}};
  if (!(x_max > 0.0)) return table;

  auto f_df = [m, kind](double x) -> std::pair<double, double> {
    switch (kind) {
      case ZeroKind::Function: {
        const auto v = cylinder_unchecked(m, x);
        return {v.value, v.derivative};
      }
      case ZeroKind::Derivative: {
        const auto v = cylinder_unchecked(m, x);
        // Bessel's equation: J'' = -J'/x - (1 - m^2/x^2) J
        const double second =
            -v.derivative / x - (1.0 - static_cast<double>(m) * m / (x * x)) * v.value;
        return {v.derivative, second};
      }
      case ZeroKind::Spherical: {
        const auto v = spherical_unchecked(m, x);
        return {v.value, v.derivative};
      }
    }
    return {0.0, 0.0};
  };

  // All zeros exceed the order (j_{m,1}, j'_{m,1} > m; spherical zeros
  // exceed l + 1/2), and consecutive zeros are more than 2 apart, so a
  // 0.5 scan from there brackets every zero exactly once.
  constexpr double kStep = 0.5;
  double a = m > 0 ? static_cast<double>(m) : (kind == ZeroKind::Derivative ? 1e-3 : 0.0);
  if (a >= x_max) return table;
  double fa = f_df(a).first;
  while (a < x_max) {
    const double b = std::min(a + kStep, x_max);
    const double fb = f_df(b).first;
    if (fb == 0.0) {
      table.zeros.push_back(b);
    } else if (fa != 0.0 && (fa < 0.0) != (fb < 0.0)) {
      const double tol = 4e-16 * b;
      table.zeros.push_back(bracketed_newton(f_df, a, b, tol));
    }
    a = b;
    fa = fb;
  }
  return table;
}

}  // namespace spectral_bounds
