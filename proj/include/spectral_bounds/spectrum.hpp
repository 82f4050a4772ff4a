#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spectral_bounds/geometry.hpp"

namespace spectral_bounds {

enum class SpectrumKind { Dirichlet, Neumann };

std::string to_string(SpectrumKind kind);
SpectrumKind parse_spectrum_kind(const std::string& text);

/// Complete, sorted, multiplicity-expanded list of Laplacian eigenvalues
/// strictly below a cutoff. Indices follow the 1-based convention
/// lambda_1 <= lambda_2 <= ..., so eigenvalue(k) is eigenvalues()[k - 1].
class Spectrum {
 public:
  /// Validates ordering, sign and cutoff invariants; throws std::invalid_argument.
  Spectrum(SpectrumKind kind, Domain domain, double cutoff, std::vector<double> eigenvalues,
           bool near_cutoff_excluded = false);

  SpectrumKind kind() const { return kind_; }
  const Domain& domain() const { return domain_; }
  double cutoff() const { return cutoff_; }
  std::span<const double> eigenvalues() const { return eigenvalues_; }
  std::size_t size() const { return eigenvalues_.size(); }
  double eigenvalue(std::size_t k) const;

  /// Set when a candidate fell within the tie band just under the cutoff.
  bool near_cutoff_excluded() const { return near_cutoff_excluded_; }

  /// #{k : lambda_k < lambda}, without the cutoff check.
  std::size_t count_below(double lambda) const;

  /// sum_{i <= k} lambda_i, without range checks.
  long double prefix_sum(std::size_t k) const { return prefix_[k]; }

 private:
  SpectrumKind kind_;
  Domain domain_;
  double cutoff_;
  std::vector<double> eigenvalues_;
  std::vector<long double> prefix_;
  bool near_cutoff_excluded_;
};

struct EnumerationOptions {
  std::size_t max_entries = 10'000'000;
  bool parallel = true;
};

/// Exact enumeration for Box (any dimension, both kinds), Disk (both kinds)
/// and Ball3 (Dirichlet). Throws std::invalid_argument for unsupported
/// pairs and std::length_error past the size limit.
Spectrum enumerate_spectrum(const Domain& domain, SpectrumKind kind, double cutoff,
                            const EnumerationOptions& options = {});

/// #{k : lambda_k < lambda}. Throws std::out_of_range for lambda > cutoff.
std::size_t counting_function(const Spectrum& s, double lambda);

/// sum_{k : lambda_k < lambda} (lambda - lambda_k).
double riesz_mean(const Spectrum& s, double lambda);

/// sum_{i = 1..k} lambda_i. Throws std::out_of_range for k > size().
double partial_sum(const Spectrum& s, std::size_t k);

}  // namespace spectral_bounds
