#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "spectral_bounds/geometry.hpp"

namespace spectral_bounds {

enum class BoundId {
  LySum,        // Berezin-Li-Yau lower bound on sum_{i<=k} lambda_i
  MelasSum,     // Melas' improvement of LySum
  LyEig,        // Li-Yau lower bound on lambda_k
  LaptevD,      // classical Dirichlet Riesz-mean upper bound
  ImprovedD,    // Riesz-mean bound with the (1 - C1 J1^2 / lambda)_+ factor
  SharpD,       // Riesz-mean bound through the extremal profile break point t0
  N2Closed,     // closed form of SharpD for n = 2
  ImprovedEig,  // upper bound on k from lambda_k (improved Li-Yau)
  KrogerSum,    // Kroger upper bound on Neumann eigenvalue sums
  KrogerEig,    // Kroger upper bound on gamma_{k+1}
  LaptevN,      // classical Neumann Riesz-mean lower bound
  ImprovedN,    // improved Neumann Riesz-mean lower bound
};

enum class Side { Upper, Lower };

std::string to_string(BoundId id);
std::string to_string(Side side);

/// Real spectral parameter (lambda or gamma) or an integer index k.
using BoundArgument = std::variant<double, std::int64_t>;

struct BoundValue {
  BoundId bound_id;
  Side side;
  BoundArgument argument;
  double value;
};

struct T0Solution {
  double t0;
  double j1;
  double lambda;
  double residual;  // |theta(t0) - theta(t0 + j1)|
};

/// theta(r) = lambda r^n / n - r^{n+2} / (n+2).
double theta(int n, double lambda, double r);

/// Break point of the extremal bump: t0 in (sqrt(lambda) - j1, sqrt(lambda))
/// with theta(t0) = theta(t0 + j1). Requires sqrt((n+2) lambda / n) > j1;
/// throws std::domain_error otherwise.
T0Solution solve_t0(int n, double lambda, double j1);

/// (2 pi)^2 / (|Omega| omega(n))^{2/n}: no Dirichlet eigenvalue lies below it.
double first_eigenvalue_threshold(const GeometricFunctionals& g);

enum class DirichletRieszVariant { Laptev, Improved, Sharp, N2Closed };
enum class DirichletSumVariant { BerezinLiYau, Melas };
enum class DirichletEigenvalueVariant { LiYau, Improved };
enum class NeumannRieszVariant { Laptev, Improved };
enum class KrogerVariant { Sum, Eigenvalue };

/// Upper bound on sum_{lambda_k < lambda} (lambda - lambda_k).
/// Improved and Sharp vanish at or below first_eigenvalue_threshold.
BoundValue dirichlet_riesz_upper(const GeometricFunctionals& g, int n, double lambda,
                                 DirichletRieszVariant variant);

/// Lower bound on sum_{i <= k} lambda_i.
BoundValue dirichlet_sum_lower(const GeometricFunctionals& g, int n, std::int64_t k,
                               DirichletSumVariant variant);

/// LiYau: lower bound on lambda_k (lambda_k only checked for positivity).
/// Improved: the right-hand side that bounds k from above given lambda_k.
BoundValue dirichlet_eigenvalue_bound(const GeometricFunctionals& g, int n, std::int64_t k,
                                      double lambda_k, DirichletEigenvalueVariant variant);

/// Lower bound on sum_{gamma_k < gamma} (gamma - gamma_k).
BoundValue neumann_riesz_lower(const GeometricFunctionals& g, int n, double gamma,
                               NeumannRieszVariant variant);

/// Sum: upper bound for the first k (or, as printed, k + 1) Neumann
/// eigenvalues. Eigenvalue: upper bound on gamma_{k+1}.
BoundValue kroger_bounds(const GeometricFunctionals& g, int n, std::int64_t k,
                         KrogerVariant variant);

}  // namespace spectral_bounds
