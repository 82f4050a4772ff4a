#pragma once

#include <cmath>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace spectral_bounds {

/// Bisection for a fixed number of halvings. `f(lo)` and `f(hi)` must have
/// opposite signs (zero counts as either). Returns the final bracket.
template <class F>
std::pair<double, double> bisect(F&& f, double lo, double hi, int iterations) {
  double f_lo = f(lo);
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return {mid, mid};
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

/// Safeguarded Newton iteration inside a sign-change bracket. `f_df(x)` returns
/// {f(x), f'(x)}. Falls back to bisection whenever the Newton step leaves the
/// bracket or stalls. Converges to the bracket width `x_tol` or an exact zero.
template <class F>
double bracketed_newton(F&& f_df, double lo, double hi, double x_tol,
                        int max_iterations = 200) {
  auto [f_lo, df_lo] = f_df(lo);
  auto [f_hi, df_hi] = f_df(hi);
  (void)df_lo;
  (void)df_hi;
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0))
    throw std::invalid_argument("bracketed_newton: no sign change in bracket");
  // Orient so that f(lo) < 0.
  if (f_lo > 0.0) std::swap(lo, hi);

  double x = 0.5 * (lo + hi);
  double dx_old = std::abs(hi - lo);
  double dx = dx_old;
  auto [f, df] = f_df(x);
  for (int it = 0; it < max_iterations; ++it) {
    const bool newton_out = ((x - hi) * df - f) * ((x - lo) * df - f) > 0.0;
    const bool newton_slow = std::abs(2.0 * f) > std::abs(dx_old * df);
    dx_old = dx;
    if (newton_out || newton_slow || df == 0.0) {
      dx = 0.5 * (hi - lo);
      x = lo + dx;
    } else {
      dx = f / df;
      x -= dx;
    }
    if (std::abs(dx) < x_tol) return x;
    std::tie(f, df) = f_df(x);
    if (f == 0.0) return x;
    if (f < 0.0)
      lo = x;
    else
      hi = x;
    if (std::abs(hi - lo) < x_tol) return 0.5 * (lo + hi);
  }
  return x;
}

}  // namespace spectral_bounds
