#include "spectral_bounds/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spectral_bounds/constants.hpp"
#include "spectral_bounds/roots.hpp"

namespace spectral_bounds {

std::string to_string(BoundId id) {
  switch (id) {
    case BoundId::LySum: return "LY_SUM";
    case BoundId::MelasSum: return "MELAS_SUM";
    case BoundId::LyEig: return "LY_EIG";
    case BoundId::LaptevD: return "LAPTEV_D";
    case BoundId::ImprovedD: return "IMPROVED_D";
    case BoundId::SharpD: return "SHARP_D";
    case BoundId::N2Closed: return "N2_CLOSED";
    case BoundId::ImprovedEig: return "IMPROVED_EIG";
    case BoundId::KrogerSum: return "KROGER_SUM";
    case BoundId::KrogerEig: return "KROGER_EIG";
    case BoundId::LaptevN: return "LAPTEV_N";
    case BoundId::ImprovedN: return "IMPROVED_N";
  }
  return "UNKNOWN";
}

std::string to_string(Side side) { return side == Side::Upper ? "upper" : "lower"; }

namespace {

void check_dimension(const GeometricFunctionals& g, int n) {
  if (n < 2) throw std::invalid_argument("bounds need dimension n >= 2");
  if (g.dim != n)
    throw std::invalid_argument("dimension " + std::to_string(n) +
                                " does not match the domain dimension " +
                                std::to_string(g.dim));
}

void check_index(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("index k must be >= 1");
}

// a^m - b^m = (a - b) sum_i a^{m-1-i} b^i, free of cancellation for a ~ b.
double power_difference(double a, double b, int m) {
  double sum = 0.0;
  double b_pow = 1.0;
  for (int i = 0; i < m; ++i) {
    sum += std::pow(a, m - 1 - i) * b_pow;
    b_pow *= b;
  }
  return (a - b) * sum;
}

// h(t) = theta(t + j1) - theta(t), evaluated through power differences.
double theta_gap(int n, double lambda, double t, double j1) {
  return lambda * power_difference(t + j1, t, n) / n -
         power_difference(t + j1, t, n + 2) / (n + 2);
}

// Weyl-normalized Dirichlet scale (2 pi)^2 / (omega |Omega|)^{2/n}.
double weyl_scale(const GeometricFunctionals& g) { return first_eigenvalue_threshold(g); }

double ipow(double base, double exponent) { return std::exp(exponent * std::log(base)); }

}  // namespace

double theta(int n, double lambda, double r) {
  return lambda * std::pow(r, n) / n - std::pow(r, n + 2) / (n + 2);
}

T0Solution solve_t0(int n, double lambda, double j1) {
  if (n < 2) throw std::domain_error("solve_t0: n must be >= 2");
  if (!(lambda > 0.0) || !(j1 > 0.0))
    throw std::domain_error("solve_t0: lambda and j1 must be positive");
  if (!(std::sqrt((n + 2.0) * lambda / n) > j1))
    throw std::domain_error("solve_t0: requires sqrt((n+2) lambda / n) > j1");

  const double root = std::sqrt(lambda);
  const double lo = std::max(0.0, root - j1);
  const double hi = root;
  auto gap = [&](double t) { return theta_gap(n, lambda, t, j1); };
  auto [blo, bhi] = bisect(gap, lo, hi, 64);
  // Newton polish: h'(t) = theta'(t + j1) - theta'(t), theta'(r) = r^{n-1} (lambda - r^2).
  auto gap_and_slope = [&](double t) -> std::pair<double, double> {
    const double a = t + j1;
    const double slope = std::pow(a, n - 1) * (lambda - a * a) -
                         std::pow(t, n - 1) * (lambda - t * t);
    return {gap(t), slope};
  };
  double t0 = 0.5 * (blo + bhi);
  if (blo < bhi) {
    const double f_lo = gap(blo), f_hi = gap(bhi);
    if (f_lo != 0.0 && f_hi != 0.0 && (f_lo < 0.0) != (f_hi < 0.0))
      t0 = bracketed_newton(gap_and_slope, blo, bhi, 1e-16 * root);
  }
  T0Solution sol{t0, j1, lambda, std::abs(gap(t0))};
  return sol;
}

double first_eigenvalue_threshold(const GeometricFunctionals& g) {
  const double n = g.dim;
  const double weyl = unit_ball_volume(g.dim) * g.volume;
  return 4.0 * std::numbers::pi * std::numbers::pi / ipow(weyl, 2.0 / n);
}

BoundValue dirichlet_riesz_upper(const GeometricFunctionals& g, int n, double lambda,
                                 DirichletRieszVariant variant) {
  check_dimension(g, n);
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  const double w = weyl_coefficient(n, g.volume);
  const double nd = n;
  const double j1_sq = g.j1 * g.j1;
  const double laptev = 2.0 / (nd + 2.0) * w * ipow(lambda, 1.0 + 0.5 * nd);
  const bool below_first = lambda <= first_eigenvalue_threshold(g);

  switch (variant) {
    case DirichletRieszVariant::Laptev:
      return {BoundId::LaptevD, Side::Upper, lambda, laptev};
    case DirichletRieszVariant::Improved: {
      const double factor = std::max(0.0, 1.0 - c1(n) * j1_sq / lambda);
      return {BoundId::ImprovedD, Side::Upper, lambda, below_first ? 0.0 : laptev * factor};
    }
    case DirichletRieszVariant::Sharp: {
      if (below_first) return {BoundId::SharpD, Side::Upper, lambda, 0.0};
      const auto sol = solve_t0(n, lambda, g.j1);
      const double t = sol.t0;
      const double a = t + g.j1;
      const double bracket = lambda * power_difference(a, t, n + 1) / (nd * (nd + 1.0)) -
                             power_difference(a, t, n + 3) / ((nd + 2.0) * (nd + 3.0));
      // 2 n omega (2 pi)^{-n} |Omega|^{1/2} I^{1/2} = n w / j1
      const double prefactor = nd * w / g.j1;
      return {BoundId::SharpD, Side::Upper, lambda, prefactor * bracket};
    }
    case DirichletRieszVariant::N2Closed: {
      if (n != 2) throw std::invalid_argument("n2_closed is only defined for n = 2");
      const double x = j1_sq / lambda;
      const double value = w * lambda * lambda / 2.0 * (1.0 - x / 3.0 + x * x / 20.0);
      return {BoundId::N2Closed, Side::Upper, lambda, value};
    }
  }
  throw std::invalid_argument("unknown Dirichlet Riesz variant");
}

BoundValue dirichlet_sum_lower(const GeometricFunctionals& g, int n, std::int64_t k,
                               DirichletSumVariant variant) {
  check_dimension(g, n);
  check_index(k);
  const double nd = n;
  const double kd = static_cast<double>(k);
  const double ly = nd / (nd + 2.0) * weyl_scale(g) * ipow(kd, (nd + 2.0) / nd);
  if (variant == DirichletSumVariant::BerezinLiYau) return {BoundId::LySum, Side::Lower, k, ly};
  const double melas_c = n == 2 ? 1.0 / 32.0 : 1.0 / (24.0 * (nd + 2.0));
  return {BoundId::MelasSum, Side::Lower, k, ly + melas_c * kd * g.volume / g.inertia};
}

BoundValue dirichlet_eigenvalue_bound(const GeometricFunctionals& g, int n, std::int64_t k,
                                      double lambda_k, DirichletEigenvalueVariant variant) {
  check_dimension(g, n);
  check_index(k);
  if (!(lambda_k > 0.0)) throw std::invalid_argument("lambda_k must be positive");
  const double nd = n;
  const double kd = static_cast<double>(k);
  if (variant == DirichletEigenvalueVariant::LiYau) {
    const double value = nd / (nd + 2.0) * ipow(kd, 2.0 / nd) * weyl_scale(g);
    return {BoundId::LyEig, Side::Lower, k, value};
  }
  const double w = weyl_coefficient(n, g.volume);
  const double correction =
      1.0 - c1(n) * nd / (4.0 * (nd + 2.0) * lambda_k) * g.volume / g.inertia;
  const double value = ipow(1.0 + 2.0 / nd, 0.5 * nd) * ipow(lambda_k, 0.5 * nd) * w * correction;
  return {BoundId::ImprovedEig, Side::Upper, k, value};
}

BoundValue neumann_riesz_lower(const GeometricFunctionals& g, int n, double gamma,
                               NeumannRieszVariant variant) {
  check_dimension(g, n);
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  const double nd = n;
  const double w = weyl_coefficient(n, g.volume);
  const double laptev = 2.0 / (nd + 2.0) * w * ipow(gamma, 1.0 + 0.5 * nd);
  if (variant == NeumannRieszVariant::Laptev) return {BoundId::LaptevN, Side::Lower, gamma, laptev};
  const double j1_sq = g.j1 * g.j1;
  const double correction = nd * (nd + 2.0) / 3.0 * j1_sq * j1_sq /
                            (std::sqrt(gamma) * ipow(4.0 * j1_sq + gamma, 1.5));
  return {BoundId::ImprovedN, Side::Lower, gamma, laptev * (1.0 + correction)};
}

BoundValue kroger_bounds(const GeometricFunctionals& g, int n, std::int64_t k,
                         KrogerVariant variant) {
  check_dimension(g, n);
  check_index(k);
  const double nd = n;
  const double kd = static_cast<double>(k);
  if (variant == KrogerVariant::Sum) {
    const double value = nd / (nd + 2.0) * ipow(kd, 1.0 + 2.0 / nd) * weyl_scale(g);
    return {BoundId::KrogerSum, Side::Upper, k, value};
  }
  const double value = ipow((nd + 2.0) / 2.0, 2.0 / nd) * ipow(kd, 2.0 / nd) * weyl_scale(g);
  return {BoundId::KrogerEig, Side::Upper, k, value};
}

}  // namespace spectral_bounds
