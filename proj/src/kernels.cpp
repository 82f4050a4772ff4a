#include "spectral_bounds/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spectral_bounds::kernels {

namespace {

struct LatticePlan {
  std::vector<double> weights;    // (pi / a_i)^2
  std::vector<double> tail_min;   // minimal contribution of dims i..n-1
  int min_index = 1;
  double accept_below = 0.0;      // cutoff * (1 - band)
  double cutoff = 0.0;
};

LatticePlan make_plan(std::span<const double> sides, int min_index, double cutoff) {
  if (sides.empty()) throw std::invalid_argument("box lattice needs at least one side");
  LatticePlan p;
  p.min_index = min_index;
  p.cutoff = cutoff;
  p.accept_below = cutoff * (1.0 - kCutoffBand);
  for (double a : sides) p.weights.push_back(std::numbers::pi * std::numbers::pi / (a * a));
  p.tail_min.assign(sides.size() + 1, 0.0);
  for (std::size_t i = sides.size(); i-- > 0;)
    p.tail_min[i] = p.tail_min[i + 1] + p.weights[i] * min_index * min_index;
  return p;
}

struct LatticeSink {
  std::vector<double>* out;
  bool* band_hit;
  std::atomic<std::size_t>* total;
  std::size_t max_entries;
  bool* overflow;
};

// Depth-first walk over dims [dim, n). `partial` is the sum for dims < dim.
void walk(const LatticePlan& p, std::size_t dim, double partial, LatticeSink& sink) {
  const std::size_t n = p.weights.size();
  const double w = p.weights[dim];
  for (long k = p.min_index;; ++k) {
    const double value = partial + w * static_cast<double>(k) * static_cast<double>(k);
    if (value + p.tail_min[dim + 1] >= p.cutoff) break;
    if (dim + 1 < n) {
      walk(p, dim + 1, value, sink);
      if (*sink.overflow) return;
    } else if (value < p.accept_below) {
      sink.out->push_back(value);
      if (sink.total->fetch_add(1, std::memory_order_relaxed) + 1 > sink.max_entries) {
        *sink.overflow = true;
        return;
      }
    } else {
      *sink.band_hit = true;
    }
  }
}

long first_axis_limit(const LatticePlan& p) {
  // Largest k with w_0 k^2 + tail_min[1] < cutoff, plus one for safety.
  const double room = (p.cutoff - p.tail_min[1]) / p.weights[0];
  if (room <= 0.0) return p.min_index - 1;
  return static_cast<long>(std::floor(std::sqrt(room))) + 1;
}

void throw_overflow(std::size_t max_entries) {
  throw std::length_error("spectrum would exceed " + std::to_string(max_entries) +
                          " entries; lower the cutoff");
}

}  // namespace

LatticeValues box_lattice_serial(std::span<const double> sides, int min_index,
                                 double cutoff, std::size_t max_entries) {
  const auto plan = make_plan(sides, min_index, cutoff);
  LatticeValues result;
  std::atomic<std::size_t> total{0};
  bool overflow = false;
  LatticeSink sink{&result.values, &result.near_cutoff_excluded, &total, max_entries,
                   &overflow};
  if (plan.tail_min[0] < cutoff) walk(plan, 0, 0.0, sink);
  if (overflow) throw_overflow(max_entries);
  std::sort(result.values.begin(), result.values.end());
  return result;
}

LatticeValues box_lattice_parallel(std::span<const double> sides, int min_index,
                                   double cutoff, std::size_t max_entries) {
  const auto plan = make_plan(sides, min_index, cutoff);
  LatticeValues result;
  if (!(plan.tail_min[0] < cutoff)) return result;

  const long k_last = first_axis_limit(plan);
  const long slabs = std::max(0L, k_last - plan.min_index + 1);
  std::vector<std::vector<double>> per_slab(static_cast<std::size_t>(slabs));
  std::vector<char> band(static_cast<std::size_t>(slabs), 0);
  std::atomic<std::size_t> total{0};
  std::atomic<bool> overflow_any{false};
  const std::size_t n = plan.weights.size();

#pragma omp parallel for schedule(dynamic, 1)
  for (long s = 0; s < slabs; ++s) {
    if (overflow_any.load(std::memory_order_relaxed)) continue;
    const long k = plan.min_index + s;
    const double value = plan.weights[0] * static_cast<double>(k) * static_cast<double>(k);
    if (value + plan.tail_min[1] >= plan.cutoff) continue;
    bool band_hit = false;
    bool overflow = false;
    LatticeSink sink{&per_slab[s], &band_hit, &total, max_entries, &overflow};
    if (n > 1) {
      walk(plan, 1, value, sink);
    } else if (value < plan.accept_below) {
      per_slab[s].push_back(value);
      if (total.fetch_add(1) + 1 > max_entries) overflow = true;
    } else {
      band_hit = true;
    }
    band[s] = band_hit;
    if (overflow) overflow_any = true;
  }
  if (overflow_any) throw_overflow(max_entries);

  std::size_t count = 0;
  for (const auto& v : per_slab) count += v.size();
  result.values.reserve(count);
  for (std::size_t s = 0; s < per_slab.size(); ++s) {
    result.values.insert(result.values.end(), per_slab[s].begin(), per_slab[s].end());
    if (band[s]) result.near_cutoff_excluded = true;
  }
  std::sort(result.values.begin(), result.values.end());
  return result;
}

std::vector<BesselZeroTable> zero_tables_serial(ZeroKind kind, double x_max) {
  const int orders = x_max > 0.0 ? static_cast<int>(std::floor(x_max)) + 1 : 0;
  std::vector<BesselZeroTable> tables;
  tables.reserve(orders);
  for (int m = 0; m < orders; ++m) tables.push_back(bessel_zeros(m, kind, x_max));
  return tables;
}

std::vector<BesselZeroTable> zero_tables_parallel(ZeroKind kind, double x_max) {
  const int orders = x_max > 0.0 ? static_cast<int>(std::floor(x_max)) + 1 : 0;
  std::vector<BesselZeroTable> tables(orders);
#pragma omp parallel for schedule(dynamic, 1)
  for (int m = 0; m < orders; ++m) tables[m] = bessel_zeros(m, kind, x_max);
  return tables;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace spectral_bounds::kernels
