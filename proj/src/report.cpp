#include "spectral_bounds/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spectral_bounds/format.hpp"

namespace spectral_bounds {

namespace {

constexpr double kGridOffset = 1e-9;

Check make_check(const BoundValue& bound, double grid_point, double measured) {
  Check c;
  c.bound_id = to_string(bound.bound_id);
  c.grid_point = grid_point;
  c.lhs = measured;
  c.rhs = bound.value;
  c.slack = bound.side == Side::Upper ? c.rhs - c.lhs : c.lhs - c.rhs;
  c.pass = c.slack >= 0.0;
  return c;
}

nlohmann::ordered_json real(double value) {
  if (!std::isfinite(value)) return nullptr;
  return round_to_15_digits(value);
}

}  // namespace

std::vector<double> verification_grid(const Spectrum& s, int grid) {
  if (grid < 2) throw std::invalid_argument("grid needs at least 2 points");
  const std::size_t first = s.kind() == SpectrumKind::Dirichlet ? 1 : 2;
  if (s.size() < first)
    throw std::invalid_argument("cutoff too small: no eigenvalue to anchor the grid");
  const double lo = s.eigenvalue(first) * (1.0 + kGridOffset);
  const double hi = s.cutoff();
  if (!(lo < hi)) throw std::invalid_argument("grid start is not below the cutoff");
  std::vector<double> points(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    points[static_cast<std::size_t>(i)] =
        i + 1 == grid ? hi : lo + (hi - lo) * static_cast<double>(i) / (grid - 1);
  }
  return points;
}

VerificationReport verify(const Spectrum& s, const GeometricFunctionals& g,
                          const VerifyOptions& options) {
  const int n = s.domain().dim();
  if (n < 2) throw std::invalid_argument("verification needs dimension n >= 2");
  if (g.dim != n) throw std::invalid_argument("functionals do not match the domain");
  if (options.k_max < 1) throw std::invalid_argument("k_max must be >= 1");

  VerificationReport report;
  report.domain_spec = s.domain().spec();
  report.kind = to_string(s.kind());
  report.cutoff = s.cutoff();
  report.grid_size = options.grid;
  report.k_max = options.k_max;

  const auto grid = verification_grid(s, options.grid);
  const bool dirichlet = s.kind() == SpectrumKind::Dirichlet;

  // Riesz-mean checks, one slot per grid point so the order is fixed.
  std::vector<std::vector<Check>> per_point(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(grid.size()); ++i) {
    const double x = grid[static_cast<std::size_t>(i)];
    const double mean = riesz_mean(s, x);
    auto& out = per_point[static_cast<std::size_t>(i)];
    if (dirichlet) {
      out.push_back(make_check(dirichlet_riesz_upper(g, n, x, DirichletRieszVariant::Laptev), x, mean));
      out.push_back(make_check(dirichlet_riesz_upper(g, n, x, DirichletRieszVariant::Improved), x, mean));
      out.push_back(make_check(dirichlet_riesz_upper(g, n, x, DirichletRieszVariant::Sharp), x, mean));
      if (n == 2)
        out.push_back(make_check(dirichlet_riesz_upper(g, n, x, DirichletRieszVariant::N2Closed), x, mean));
    } else {
      out.push_back(make_check(neumann_riesz_lower(g, n, x, NeumannRieszVariant::Laptev), x, mean));
      out.push_back(make_check(neumann_riesz_lower(g, n, x, NeumannRieszVariant::Improved), x, mean));
    }
  }
  for (auto& block : per_point)
    report.checks.insert(report.checks.end(), block.begin(), block.end());

  // Index checks.
  const auto size = static_cast<std::int64_t>(s.size());
  if (dirichlet) {
    const std::int64_t k_end = std::min(size, options.k_max);
    for (std::int64_t k = 1; k <= k_end; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      const double kd = static_cast<double>(k);
      const double sum = partial_sum(s, ku);
      const double lambda_k = s.eigenvalue(ku);
      report.checks.push_back(make_check(dirichlet_sum_lower(g, n, k, DirichletSumVariant::BerezinLiYau), kd, sum));
      report.checks.push_back(make_check(dirichlet_sum_lower(g, n, k, DirichletSumVariant::Melas), kd, sum));
      report.checks.push_back(make_check(
          dirichlet_eigenvalue_bound(g, n, k, lambda_k, DirichletEigenvalueVariant::LiYau), kd, lambda_k));
      report.checks.push_back(make_check(
          dirichlet_eigenvalue_bound(g, n, k, lambda_k, DirichletEigenvalueVariant::Improved), kd, kd));
    }
  } else {
    const std::int64_t k_end = std::min(size, options.k_max);
    ConventionDiagnostic printed;
    printed.description = "sum_{j<=k+1} gamma_j <= kroger_sum(k)";
    printed.min_slack = std::numeric_limits<double>::infinity();
    for (std::int64_t k = 1; k <= k_end; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      const double kd = static_cast<double>(k);
      const auto sum_bound = kroger_bounds(g, n, k, KrogerVariant::Sum);
      Check shifted = make_check(sum_bound, kd, partial_sum(s, ku));
      shifted.bound_id = "KROGER_SUM_SHIFTED";
      report.checks.push_back(shifted);
      if (k + 1 > size) continue;
      report.checks.push_back(
          make_check(kroger_bounds(g, n, k, KrogerVariant::Eigenvalue), kd, s.eigenvalue(ku + 1)));
      const double slack = sum_bound.value - partial_sum(s, ku + 1);
      printed.k_checked = k;
      printed.min_slack = std::min(printed.min_slack, slack);
      if (slack < 0.0 && !printed.first_failure_k) {
        printed.holds_all_k = false;
        printed.first_failure_k = k;
      }
    }
    report.kroger_sum_printed = printed;
  }

  for (const auto& c : report.checks) {
    auto [it, inserted] = report.min_slack_per_bound.try_emplace(c.bound_id, c.slack);
    if (!inserted) it->second = std::min(it->second, c.slack);
    report.overall_pass = report.overall_pass && c.pass;
  }
  return report;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["domain_spec"] = r.domain_spec;
  j["kind"] = r.kind;
  j["cutoff"] = real(r.cutoff);
  j["grid_size"] = r.grid_size;
  j["k_max"] = r.k_max;
  j["overall_pass"] = r.overall_pass;
  auto& mins = j["min_slack_per_bound"] = nlohmann::ordered_json::object();
  for (const auto& [id, slack] : r.min_slack_per_bound) mins[id] = real(slack);
  if (r.kroger_sum_printed) {
    const auto& d = *r.kroger_sum_printed;
    j["kroger_sum_printed"] = {
        {"description", d.description},
        {"k_checked", d.k_checked},
        {"holds_all_k", d.holds_all_k},
        {"first_failure_k", d.first_failure_k ? nlohmann::ordered_json(*d.first_failure_k)
                                              : nlohmann::ordered_json(nullptr)},
        {"min_slack", real(d.min_slack)}};
  }
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"bound_id", c.bound_id},
                      {"grid_point", real(c.grid_point)},
                      {"lhs", real(c.lhs)},
                      {"rhs", real(c.rhs)},
                      {"slack", real(c.slack)},
                      {"pass", c.pass}});
  }
  return j;
}

nlohmann::ordered_json to_json(const WindowScan& scan) {
  nlohmann::ordered_json j;
  auto& windows = j["windows"] = nlohmann::ordered_json::array();
  for (const auto& w : scan.windows) {
    nlohmann::ordered_json item;
    item["kind"] = to_string(w.kind);
    item["start_index"] = w.start_index;
    item["start_eig"] = real(w.start_eig);
    item["threshold"] = real(w.threshold);
    item["found_index"] = w.found_index ? nlohmann::ordered_json(*w.found_index) : nullptr;
    item["found_eig"] = w.found_eig ? real(*w.found_eig) : nullptr;
    item["strengthened_slack"] = w.strengthened_slack ? real(*w.strengthened_slack) : nullptr;
    item["truncated"] = w.truncated;
    item["statement_form_holds"] =
        w.statement_form_holds ? nlohmann::ordered_json(*w.statement_form_holds) : nullptr;
    windows.push_back(item);
  }
  j["warnings"] = scan.warnings;
  return j;
}

nlohmann::ordered_json to_json(const GeometricFunctionals& g) {
  return {{"dim", g.dim},
          {"volume", real(g.volume)},
          {"inertia", real(g.inertia)},
          {"r_omega", real(g.r_omega)},
          {"j1", real(g.j1)},
          {"diameter", real(g.diameter)}};
}

nlohmann::ordered_json to_json(const DimensionConstants& c) {
  return {{"n", c.n},
          {"omega_n", real(c.omega_n)},
          {"c1", real(c.c1)},
          {"stirling_factor",
           c.stirling_factor ? real(*c.stirling_factor) : nlohmann::ordered_json(nullptr)}};
}

nlohmann::ordered_json to_json(const BoundValue& v) {
  nlohmann::ordered_json j;
  j["bound_id"] = to_string(v.bound_id);
  j["side"] = to_string(v.side);
  if (const auto* k = std::get_if<std::int64_t>(&v.argument))
    j["argument"] = *k;
  else
    j["argument"] = real(std::get<double>(v.argument));
  j["value"] = real(v.value);
  return j;
}

nlohmann::ordered_json to_json(const Spectrum& s) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(s.kind());
  j["domain"] = s.domain().spec();
  j["cutoff"] = real(s.cutoff());
  j["near_cutoff_excluded"] = s.near_cutoff_excluded();
  auto& values = j["eigenvalues"] = nlohmann::ordered_json::array();
  for (double v : s.eigenvalues()) values.push_back(real(v));
  return j;
}

}  // namespace spectral_bounds
