#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library: power series in long double, brute-force lattice loops and
// direct summation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

/// J_m(x) by its power series in long double. Cancellation limits it to
/// about 1e-13 absolute for x <= 16.
inline long double bessel_j(int m, long double x) {
  long double term = 1.0L;
  for (int i = 1; i <= m; ++i) term *= x / (2.0L * i);
  long double sum = term;
  const long double q = -x * x / 4.0L;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * (k + m));
    sum += term;
    if (std::fabs(term) < 1e-30L * std::fabs(sum) && k > x) break;
  }
  return sum;
}

/// J'_m(x) by the term-wise differentiated series.
inline long double bessel_j_prime(int m, long double x) {
  if (m == 0) return -bessel_j(1, x);
  return 0.5L * (bessel_j(m - 1, x) - bessel_j(m + 1, x));
}

/// Spherical j_l(x) = x^l sum_k (-x^2/2)^k / (k! (2l+2k+1)!!).
inline long double spherical_j(int l, long double x) {
  long double term = 1.0L;
  for (int i = 0; i <= l; ++i) term /= (2.0L * i + 1.0L);
  for (int i = 0; i < l; ++i) term *= x;
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -x * x / (2.0L * k * (2.0L * l + 2.0L * k + 1.0L));
    sum += term;
    if (std::fabs(term) < 1e-30L * std::fabs(sum) && k > x) break;
  }
  return sum;
}

/// Zeros of f in (lo, hi] by a fine sign scan and plain bisection.
inline std::vector<double> zeros_by_bisection(const std::function<long double(long double)>& f,
                                              double lo, double hi, double step = 0.01) {
  std::vector<double> out;
  long double a = lo;
  long double fa = f(a);
  while (a < hi) {
    long double b = std::min<long double>(a + step, hi);
    long double fb = f(b);
    if ((fa < 0) != (fb < 0)) {
      long double x0 = a, x1 = b, f0 = fa;
      for (int i = 0; i < 200; ++i) {
        long double mid = 0.5L * (x0 + x1);
        long double fm = f(mid);
        if ((fm < 0) == (f0 < 0)) {
          x0 = mid;
          f0 = fm;
        } else {
          x1 = mid;
        }
      }
      out.push_back(static_cast<double>(0.5L * (x0 + x1)));
    }
    a = b;
    fa = fb;
  }
  return out;
}

/// Box eigenvalues pi^2 sum (k_i/a_i)^2 < cutoff by exhaustive loops.
inline std::vector<double> box_eigenvalues(const std::vector<double>& sides, bool neumann,
                                           double cutoff) {
  std::vector<double> out;
  const int lo = neumann ? 0 : 1;
  std::vector<int> k(sides.size(), lo);
  std::vector<int> kmax(sides.size());
  for (std::size_t i = 0; i < sides.size(); ++i)
    kmax[i] = static_cast<int>(std::ceil(sides[i] * std::sqrt(cutoff) / std::numbers::pi)) + 1;
  while (true) {
    double v = 0.0;
    for (std::size_t i = 0; i < sides.size(); ++i) {
      const double q = k[i] / sides[i];
      v += q * q;
    }
    v *= std::numbers::pi * std::numbers::pi;
    if (v < cutoff) out.push_back(v);
    std::size_t i = 0;
    while (i < k.size() && ++k[i] > kmax[i]) k[i++] = lo;
    if (i == k.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline double riesz_mean(const std::vector<double>& ev, double lambda) {
  long double sum = 0.0L;
  for (double v : ev)
    if (v < lambda) sum += lambda - v;
  return static_cast<double>(sum);
}

/// Break point for n = 2 in closed form.
inline double t0_n2(double lambda, double j1) {
  return std::sqrt(lambda - j1 * j1 / 4.0) - j1 / 2.0;
}

}  // namespace oracle
