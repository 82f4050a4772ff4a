#pragma once

// Data-parallel enumeration kernels. Every kernel has a serial reference
// twin; the parallel version must produce bit-identical output.

#include <cstddef>
#include <span>
#include <vector>

#include "spectral_bounds/bessel.hpp"

namespace spectral_bounds::kernels {

/// Relative width of the band just below the cutoff whose candidates are
/// dropped, so floating-point ties with the cutoff never decide completeness.
inline constexpr double kCutoffBand = 1e-9;

struct LatticeValues {
  std::vector<double> values;  // sorted, multiplicity expanded
  bool near_cutoff_excluded = false;
};

/// All pi^2 sum_i (k_i / a_i)^2 < cutoff over integer k_i >= min_index
/// (1 for Dirichlet, 0 for Neumann). Throws std::length_error past max_entries.
LatticeValues box_lattice_serial(std::span<const double> sides, int min_index,
                                 double cutoff, std::size_t max_entries);
LatticeValues box_lattice_parallel(std::span<const double> sides, int min_index,
                                   double cutoff, std::size_t max_entries);

/// Zero tables for every order 0..floor(x_max); orders past the last one
/// with a zero below x_max come back empty.
std::vector<BesselZeroTable> zero_tables_serial(ZeroKind kind, double x_max);
std::vector<BesselZeroTable> zero_tables_parallel(ZeroKind kind, double x_max);

/// Number of threads the parallel kernels will use.
int max_threads();

}  // namespace spectral_bounds::kernels
