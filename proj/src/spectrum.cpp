#include "spectral_bounds/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spectral_bounds/bessel.hpp"
#include "spectral_bounds/kernels.hpp"

namespace spectral_bounds {

std::string to_string(SpectrumKind kind) {
  return kind == SpectrumKind::Dirichlet ? "dirichlet" : "neumann";
}

SpectrumKind parse_spectrum_kind(const std::string& text) {
  if (text == "dirichlet") return SpectrumKind::Dirichlet;
  if (text == "neumann") return SpectrumKind::Neumann;
  throw std::invalid_argument("kind must be 'dirichlet' or 'neumann'");
}

Spectrum::Spectrum(SpectrumKind kind, Domain domain, double cutoff,
                   std::vector<double> eigenvalues, bool near_cutoff_excluded)
    : kind_(kind),
      domain_(std::move(domain)),
      cutoff_(cutoff),
      eigenvalues_(std::move(eigenvalues)),
      near_cutoff_excluded_(near_cutoff_excluded) {
  if (!(cutoff_ > 0.0)) throw std::invalid_argument("cutoff must be positive");
  if (!std::is_sorted(eigenvalues_.begin(), eigenvalues_.end()))
    throw std::invalid_argument("eigenvalues must be sorted");
  if (!eigenvalues_.empty()) {
    if (eigenvalues_.back() >= cutoff_)
      throw std::invalid_argument("eigenvalues must lie below the cutoff");
    if (kind_ == SpectrumKind::Dirichlet && !(eigenvalues_.front() > 0.0))
      throw std::invalid_argument("Dirichlet eigenvalues must be positive");
    if (kind_ == SpectrumKind::Neumann && eigenvalues_.front() != 0.0)
      throw std::invalid_argument("Neumann spectrum must start at 0");
  }
  prefix_.resize(eigenvalues_.size() + 1);
  prefix_[0] = 0.0L;
  for (std::size_t i = 0; i < eigenvalues_.size(); ++i)
    prefix_[i + 1] = prefix_[i] + static_cast<long double>(eigenvalues_[i]);
}

double Spectrum::eigenvalue(std::size_t k) const {
  if (k < 1 || k > eigenvalues_.size())
    throw std::out_of_range("eigenvalue index " + std::to_string(k) + " outside 1.." +
                            std::to_string(eigenvalues_.size()));
  return eigenvalues_[k - 1];
}

std::size_t Spectrum::count_below(double lambda) const {
  return static_cast<std::size_t>(
      std::lower_bound(eigenvalues_.begin(), eigenvalues_.end(), lambda) -
      eigenvalues_.begin());
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// Squared scaled zeros with multiplicity (1 for order 0, else `mult(order)`).
template <class Mult>
void append_zero_spectrum(const std::vector<BesselZeroTable>& tables, double radius,
                          double cutoff, std::size_t max_entries, Mult mult,
                          std::vector<double>& out, bool& band_hit) {
  const double accept_below = cutoff * (1.0 - kernels::kCutoffBand);
  for (const auto& t : tables) {
    for (double z : t.zeros) {
      const double lambda = (z / radius) * (z / radius);
      if (lambda >= cutoff) continue;
      if (lambda >= accept_below) {
        band_hit = true;
        continue;
      }
      const std::size_t copies = mult(t.order);
      if (out.size() + copies > max_entries)
        throw std::length_error("spectrum would exceed " + std::to_string(max_entries) +
                                " entries; lower the cutoff");
      out.insert(out.end(), copies, lambda);
    }
  }
}

}  // namespace

Spectrum enumerate_spectrum(const Domain& domain, SpectrumKind kind, double cutoff,
                            const EnumerationOptions& options) {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff))
    throw std::invalid_argument("cutoff must be positive and finite");
  const auto zero_tables = options.parallel ? kernels::zero_tables_parallel
                                            : kernels::zero_tables_serial;
  std::vector<double> values;
  bool band_hit = false;

  std::visit(
      overloaded{
          [&](const Box& box) {
            const int min_index = kind == SpectrumKind::Dirichlet ? 1 : 0;
            auto lattice = options.parallel
                               ? kernels::box_lattice_parallel(box.sides, min_index, cutoff,
                                                               options.max_entries)
                               : kernels::box_lattice_serial(box.sides, min_index, cutoff,
                                                             options.max_entries);
            values = std::move(lattice.values);
            band_hit = lattice.near_cutoff_excluded;
          },
          [&](const Disk& disk) {
            const double x_max = disk.radius * std::sqrt(cutoff);
            if (x_max > 1e4) throw std::invalid_argument("disk cutoff too large (r sqrt(L) > 1e4)");
            auto two_fold = [](int m) -> std::size_t { return m == 0 ? 1 : 2; };
            if (kind == SpectrumKind::Dirichlet) {
              append_zero_spectrum(zero_tables(ZeroKind::Function, x_max), disk.radius, cutoff,
                                   options.max_entries, two_fold, values, band_hit);
            } else {
              values.push_back(0.0);
              append_zero_spectrum(zero_tables(ZeroKind::Derivative, x_max), disk.radius,
                                   cutoff, options.max_entries, two_fold, values, band_hit);
            }
          },
          [&](const Ball3& ball) {
            if (kind != SpectrumKind::Dirichlet)
              throw std::invalid_argument("Neumann spectrum of ball3 is not supported");
            const double x_max = ball.radius * std::sqrt(cutoff);
            if (x_max > 1e4) throw std::invalid_argument("ball cutoff too large (r sqrt(L) > 1e4)");
            auto spherical = [](int l) -> std::size_t { return 2 * static_cast<std::size_t>(l) + 1; };
            append_zero_spectrum(zero_tables(ZeroKind::Spherical, x_max), ball.radius, cutoff,
                                 options.max_entries, spherical, values, band_hit);
          },
          [&](const Polygon&) {
            throw std::invalid_argument("polygons have no enumerable spectrum");
          }},
      domain.shape());

  std::sort(values.begin(), values.end());
  return Spectrum(kind, domain, cutoff, std::move(values), band_hit);
}

std::size_t counting_function(const Spectrum& s, double lambda) {
  if (lambda > s.cutoff())
    throw std::out_of_range("lambda exceeds the enumeration cutoff");
  return s.count_below(lambda);
}

double riesz_mean(const Spectrum& s, double lambda) {
  const std::size_t n = counting_function(s, lambda);
  const long double total =
      static_cast<long double>(n) * static_cast<long double>(lambda) - s.prefix_sum(n);
  return static_cast<double>(total);
}

double partial_sum(const Spectrum& s, std::size_t k) {
  if (k > s.size())
    throw std::out_of_range("partial_sum index " + std::to_string(k) +
                            " exceeds enumerated count " + std::to_string(s.size()));
  return static_cast<double>(s.prefix_sum(k));
}

}  // namespace spectral_bounds
