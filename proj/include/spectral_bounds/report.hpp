#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectral_bounds/bounds.hpp"
#include "spectral_bounds/constants.hpp"
#include "spectral_bounds/geometry.hpp"
#include "spectral_bounds/polya.hpp"
#include "spectral_bounds/spectrum.hpp"

namespace spectral_bounds {

/// One inequality evaluated at one grid point (or index k, stored as a real).
/// slack = rhs - lhs for upper bounds and lhs - rhs for lower bounds.
struct Check {
  std::string bound_id;
  double grid_point = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
};

/// Diagnostic for an alternative index convention that is reported but does
/// not enter overall_pass.
struct ConventionDiagnostic {
  std::string description;
  std::int64_t k_checked = 0;
  bool holds_all_k = true;
  std::optional<std::int64_t> first_failure_k;
  double min_slack = 0.0;
};

struct VerificationReport {
  std::string domain_spec;
  std::string kind;
  double cutoff = 0.0;
  int grid_size = 0;
  std::int64_t k_max = 0;
  std::vector<Check> checks;
  std::map<std::string, double> min_slack_per_bound;
  bool overall_pass = true;
  // Neumann only: the Kroger sum with sum_{j <= k+1} on the left.
  std::optional<ConventionDiagnostic> kroger_sum_printed;
};

struct VerifyOptions {
  int grid = 100;
  std::int64_t k_max = 1000;
};

/// Equispaced grid with both endpoints: from lambda_1 (1 + 1e-9) for
/// Dirichlet, gamma_2 (1 + 1e-9) for Neumann, up to the cutoff.
std::vector<double> verification_grid(const Spectrum& s, int grid);

/// Checks every applicable inequality on the grid and for k = 1..k_max.
/// Grid points are evaluated in parallel; output order is fixed.
VerificationReport verify(const Spectrum& s, const GeometricFunctionals& g,
                          const VerifyOptions& options = {});

// JSON views used by the CLI. Reals are rounded to 15 significant digits.
nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json to_json(const WindowScan& scan);
nlohmann::ordered_json to_json(const GeometricFunctionals& g);
nlohmann::ordered_json to_json(const DimensionConstants& c);
nlohmann::ordered_json to_json(const BoundValue& v);
nlohmann::ordered_json to_json(const Spectrum& s);

}  // namespace spectral_bounds
