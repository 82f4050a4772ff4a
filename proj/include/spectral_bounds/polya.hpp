#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectral_bounds/geometry.hpp"
#include "spectral_bounds/spectrum.hpp"

namespace spectral_bounds {

/// Dirichlet: k <= W lambda_k^{n/2}. Neumann: W gamma_{k+1}^{n/2} <= k.
/// W = omega(n) |Omega| / (2 pi)^n. Throws std::out_of_range for bad k.
bool polya_check(const Spectrum& s, std::size_t k);

struct ProfileValue {
  double value = 0.0;
  double derivative = 0.0;
};

/// Improved Dirichlet Riesz bound with half the correction, minus the Riesz
/// mean; derivative taken inside the eigenvalue-free interval containing lambda.
ProfileValue f_d(const Spectrum& s, const GeometricFunctionals& g, int n, double lambda);

/// Neumann Riesz mean minus the weakened improved Kroger-type lower bound (n >= 3).
ProfileValue f_n(const Spectrum& s, const GeometricFunctionals& g, int n, double gamma);

/// (2 lambda_j^{1+n/2} / (c1(n) j1^2))^{2/n}.
double dirichlet_window_threshold(const GeometricFunctionals& g, int n, double lambda_j);

/// (j / W)^{2(n+2)/(n(n-2))} (3 ((n+2)/2)^{2/n} 2^{3/2} / (n j1^4))^{2/(n-2)}.
double neumann_window_threshold(const GeometricFunctionals& g, int n, std::int64_t j,
                                double gamma_j);

/// A run of equal eigenvalues (1-based inclusive index range).
struct EigenGroup {
  double value = 0.0;
  std::size_t first = 0;
  std::size_t last = 0;
};

/// Groups consecutive eigenvalues equal to within `relative_tolerance`.
std::vector<EigenGroup> group_eigenvalues(const Spectrum& s, double relative_tolerance = 1e-9);

struct PolyaWindow {
  SpectrumKind kind = SpectrumKind::Dirichlet;
  std::size_t start_index = 0;   // j (1-based)
  double start_eig = 0.0;        // lambda_j or gamma_j
  double threshold = 0.0;        // lower bound for the window's right end
  // Dirichlet: count k_j (last index of a group) with found_eig the next
  // distinct eigenvalue lambda_{k_j + 1}. Neumann: k_j with gamma_{k_j}.
  std::optional<std::size_t> found_index;
  std::optional<double> found_eig;
  std::optional<double> strengthened_slack;
  // Same inequality read at the least favourable index of the found
  // eigenvalue's multiplicity group.
  std::optional<bool> statement_form_holds;
  bool truncated = false;        // threshold lies beyond the cutoff
};

struct WindowScan {
  std::vector<PolyaWindow> windows;
  std::vector<std::string> warnings;
};

/// Chained window search. The first window must fit below the cutoff
/// (otherwise the result is empty with a warning); chaining continues
/// from each hit and ends after the first window that runs past the cutoff
/// or has no hit. `start` is a 1-based index.
WindowScan scan_dirichlet_windows(const Spectrum& s, const GeometricFunctionals& g, int n,
                                  std::size_t start = 1);

/// Neumann analogue (n >= 3). Without `start`, begins at the first
/// eigenvalue above 4 j1^2. Each chained window starts at the eigenvalue
/// following the previous hit.
WindowScan scan_neumann_windows(const Spectrum& s, const GeometricFunctionals& g, int n,
                                std::optional<std::size_t> start = std::nullopt);

}  // namespace spectral_bounds
