// spectral-bounds: command-line front end for the eigenvalue-bound toolkit.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <omp.h>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "spectral_bounds/bounds.hpp"
#include "spectral_bounds/constants.hpp"
#include "spectral_bounds/format.hpp"
#include "spectral_bounds/geometry.hpp"
#include "spectral_bounds/polya.hpp"
#include "spectral_bounds/report.hpp"
#include "spectral_bounds/spectrum.hpp"

namespace sb = spectral_bounds;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void apply_thread_limit() {
  const char* env = std::getenv("SPECTRAL_BOUNDS_THREADS");
  if (env == nullptr || *env == '\0') return;
  int threads = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, threads);
  if (ec != std::errc() || ptr != end || threads < 1)
    throw UsageError("SPECTRAL_BOUNDS_THREADS must be a positive integer");
  omp_set_num_threads(threads);
}

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << '\n'; }

sb::BoundArgument parse_argument(const std::string& text, bool integral) {
  if (integral) {
    std::int64_t k = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
    if (ec != std::errc() || ptr != text.data() + text.size() || k < 1)
      throw UsageError("--at must be a positive integer index for this variant");
    return k;
  }
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError("--at must be a real number for this variant");
  return x;
}

struct Options {
  int dim = 0;
  std::string domain;
  std::string kind;
  double cutoff = 0.0;
  std::string format = "csv";
  std::string at;
  std::string variant;
  std::optional<double> eig;
  bool dim_check = false;
  int grid = 100;
  std::int64_t k_max = 1000;
  std::optional<std::size_t> start;
  bool json = false;
};

int run_constants(const Options& o) {
  const auto c = sb::dimension_constants(o.dim);
  if (o.json) {
    print_json(sb::to_json(c));
    return kExitOk;
  }
  std::cout << "n " << c.n << '\n'
            << "omega_n " << sb::format_real(c.omega_n) << '\n'
            << "c1 " << sb::format_real(c.c1) << '\n'
            << "stirling_factor "
            << (c.stirling_factor ? sb::format_real(*c.stirling_factor) : std::string("none"))
            << '\n';
  return kExitOk;
}

int run_geometry(const Options& o) {
  const auto g = sb::functionals(sb::parse_domain(o.domain));
  if (o.json) {
    print_json(sb::to_json(g));
    return kExitOk;
  }
  std::cout << "dim " << g.dim << '\n'
            << "volume " << sb::format_real(g.volume) << '\n'
            << "inertia " << sb::format_real(g.inertia) << '\n'
            << "r_omega " << sb::format_real(g.r_omega) << '\n'
            << "j1 " << sb::format_real(g.j1) << '\n'
            << "diameter " << sb::format_real(g.diameter) << '\n';
  return kExitOk;
}

int run_spectrum(const Options& o) {
  if (o.format != "csv" && o.format != "json") throw UsageError("--format must be csv or json");
  const auto s = sb::enumerate_spectrum(sb::parse_domain(o.domain),
                                        sb::parse_spectrum_kind(o.kind), o.cutoff);
  if (o.json || o.format == "json") {
    print_json(sb::to_json(s));
    return kExitOk;
  }
  std::ostringstream out;
  out << "index,eigenvalue\n";
  for (std::size_t k = 1; k <= s.size(); ++k) out << k << ',' << sb::format_real(s.eigenvalue(k)) << '\n';
  std::cout << out.str();
  return kExitOk;
}

int run_bounds(const Options& o) {
  const auto domain = sb::parse_domain(o.domain);
  const auto kind = sb::parse_spectrum_kind(o.kind);
  const auto g = sb::functionals(domain);
  const int n = g.dim;
  const std::string& v = o.variant;
  std::optional<sb::BoundValue> value;

  if (kind == sb::SpectrumKind::Dirichlet) {
    if (v == "laptev" || v == "improved" || v == "sharp" || v == "n2_closed") {
      const double lambda = std::get<double>(parse_argument(o.at, false));
      const auto variant = v == "laptev"     ? sb::DirichletRieszVariant::Laptev
                           : v == "improved" ? sb::DirichletRieszVariant::Improved
                           : v == "sharp"    ? sb::DirichletRieszVariant::Sharp
                                             : sb::DirichletRieszVariant::N2Closed;
      value = sb::dirichlet_riesz_upper(g, n, lambda, variant);
    } else if (v == "berezin_li_yau" || v == "melas") {
      const auto k = std::get<std::int64_t>(parse_argument(o.at, true));
      value = sb::dirichlet_sum_lower(g, n, k,
                                      v == "melas" ? sb::DirichletSumVariant::Melas
                                                   : sb::DirichletSumVariant::BerezinLiYau);
    } else if (v == "li_yau") {
      const auto k = std::get<std::int64_t>(parse_argument(o.at, true));
      value = sb::dirichlet_eigenvalue_bound(g, n, k, o.eig.value_or(1.0),
                                             sb::DirichletEigenvalueVariant::LiYau);
    } else if (v == "improved_eig") {
      const auto k = std::get<std::int64_t>(parse_argument(o.at, true));
      if (!o.eig) throw UsageError("variant improved_eig needs --eig <lambda_k>");
      value = sb::dirichlet_eigenvalue_bound(g, n, k, *o.eig,
                                             sb::DirichletEigenvalueVariant::Improved);
    }
  } else {
    if (v == "laptev" || v == "improved") {
      const double gamma = std::get<double>(parse_argument(o.at, false));
      value = sb::neumann_riesz_lower(g, n, gamma,
                                      v == "laptev" ? sb::NeumannRieszVariant::Laptev
                                                    : sb::NeumannRieszVariant::Improved);
    } else if (v == "kroger_sum" || v == "kroger_eigenvalue") {
      const auto k = std::get<std::int64_t>(parse_argument(o.at, true));
      value = sb::kroger_bounds(g, n, k,
                                v == "kroger_sum" ? sb::KrogerVariant::Sum
                                                  : sb::KrogerVariant::Eigenvalue);
    }
  }
  if (!value) throw UsageError("unknown variant '" + v + "' for kind " + o.kind);

  // Optional geometric sanity checks: I >= n/(n+2) r^2 |Omega| and
  // 1/diam <= j1 <= sqrt((n+2)/n) / (2 r).
  bool dim_ok = true;
  nlohmann::ordered_json dim_json;
  if (o.dim_check) {
    const double hl_slack = sb::ball_inertia_slack(g);
    const double j1_low = 1.0 / g.diameter;
    const double j1_high = sb::j1_upper_limit(g);
    constexpr double kTol = 1e-12;
    dim_ok = hl_slack >= -kTol && g.j1 >= j1_low * (1.0 - kTol) && g.j1 <= j1_high * (1.0 + kTol);
    dim_json = {{"inertia_slack", sb::round_to_15_digits(hl_slack)},
                {"j1", sb::round_to_15_digits(g.j1)},
                {"j1_lower", sb::round_to_15_digits(j1_low)},
                {"j1_upper", sb::round_to_15_digits(j1_high)},
                {"pass", dim_ok}};
  }

  if (o.json) {
    auto j = sb::to_json(*value);
    if (o.dim_check) j["dim_check"] = dim_json;
    print_json(j);
  } else {
    std::cout << sb::to_string(value->bound_id) << ' ' << sb::to_string(value->side) << ' '
              << sb::format_real(value->value) << '\n';
    if (o.dim_check) std::cout << "dim_check " << (dim_ok ? "pass" : "fail") << '\n';
  }
  return dim_ok ? kExitOk : kExitFailure;
}

int run_verify(const Options& o) {
  const auto domain = sb::parse_domain(o.domain);
  const auto s = sb::enumerate_spectrum(domain, sb::parse_spectrum_kind(o.kind), o.cutoff);
  const auto report = sb::verify(s, sb::functionals(domain), {o.grid, o.k_max});
  if (o.json) {
    print_json(sb::to_json(report));
  } else {
    std::cout << "domain " << report.domain_spec << '\n'
              << "kind " << report.kind << '\n'
              << "cutoff " << sb::format_real(report.cutoff) << '\n'
              << "grid_size " << report.grid_size << '\n'
              << "checks " << report.checks.size() << '\n';
    for (const auto& [id, slack] : report.min_slack_per_bound)
      std::cout << "min_slack " << id << ' ' << sb::format_real(slack) << '\n';
    if (report.kroger_sum_printed) {
      const auto& d = *report.kroger_sum_printed;
      std::cout << "kroger_sum_printed " << (d.holds_all_k ? "holds" : "fails");
      if (d.first_failure_k) std::cout << " first_failure_k " << *d.first_failure_k;
      std::cout << '\n';
    }
    std::cout << "overall " << (report.overall_pass ? "PASS" : "FAIL") << '\n';
  }
  return report.overall_pass ? kExitOk : kExitFailure;
}

int run_polya_scan(const Options& o) {
  const auto domain = sb::parse_domain(o.domain);
  const auto kind = sb::parse_spectrum_kind(o.kind);
  const auto s = sb::enumerate_spectrum(domain, kind, o.cutoff);
  const auto g = sb::functionals(domain);
  const auto scan = kind == sb::SpectrumKind::Dirichlet
                        ? sb::scan_dirichlet_windows(s, g, g.dim, o.start.value_or(1))
                        : sb::scan_neumann_windows(s, g, g.dim, o.start);
  bool ok = true;
  for (const auto& w : scan.windows) ok = ok && (w.found_index.has_value() || w.truncated);
  if (o.json) {
    print_json(sb::to_json(scan));
  } else {
    std::cout << "start_index,start_eig,threshold,found_index,found_eig,strengthened_slack,"
                 "truncated,statement_form_holds\n";
    for (const auto& w : scan.windows) {
      std::cout << w.start_index << ',' << sb::format_real(w.start_eig) << ','
                << sb::format_real(w.threshold) << ','
                << (w.found_index ? std::to_string(*w.found_index) : "") << ','
                << (w.found_eig ? sb::format_real(*w.found_eig) : "") << ','
                << (w.strengthened_slack ? sb::format_real(*w.strengthened_slack) : "") << ','
                << (w.truncated ? "true" : "false") << ','
                << (w.statement_form_holds ? (*w.statement_form_holds ? "true" : "false") : "")
                << '\n';
    }
    for (const auto& msg : scan.warnings) std::cerr << "warning: " << msg << '\n';
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalue bounds, spectra and Polya window scans for benchmark domains"};
  app.require_subcommand(1);
  Options o;

  auto add_domain = [&](CLI::App* sub) {
    sub->add_option("--domain", o.domain, "box:a1,a2[,...] | disk:r | ball3:r | polygon:x1,y1;...")
        ->required();
  };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "dirichlet | neumann")->required();
  };
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit a single JSON object");
  };

  auto* constants = app.add_subcommand("constants", "Dimension constants omega_n, c1 and the Gamma factor");
  constants->add_option("--dim", o.dim, "Dimension n >= 2")->required();
  add_json(constants);

  auto* geometry = app.add_subcommand("geometry", "Volume, moment of inertia, J1 and diameter");
  add_domain(geometry);
  add_json(geometry);

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues strictly below a cutoff");
  add_domain(spectrum);
  add_kind(spectrum);
  spectrum->add_option("--cutoff", o.cutoff, "Spectral cutoff")->required();
  spectrum->add_option("--format", o.format, "csv | json");
  add_json(spectrum);

  auto* bounds = app.add_subcommand("bounds", "Evaluate one bound");
  add_domain(bounds);
  add_kind(bounds);
  bounds->add_option("--at", o.at, "Spectral parameter or index k")->required();
  bounds->add_option("--variant", o.variant,
                     "dirichlet: laptev|improved|sharp|n2_closed|berezin_li_yau|melas|li_yau|"
                     "improved_eig; neumann: laptev|improved|kroger_sum|kroger_eigenvalue")
      ->required();
  bounds->add_option("--eig", o.eig, "lambda_k for improved_eig");
  bounds->add_flag("--dim-check", o.dim_check, "Also check the geometric invariants");
  add_json(bounds);

  auto* verify = app.add_subcommand("verify", "Check every applicable inequality against the exact spectrum");
  add_domain(verify);
  add_kind(verify);
  verify->add_option("--cutoff", o.cutoff, "Spectral cutoff")->required();
  verify->add_option("--grid", o.grid, "Number of grid points (>= 2)");
  verify->add_option("--kmax", o.k_max, "Largest index for the index-based checks");
  add_json(verify);

  auto* scan = app.add_subcommand("polya-scan", "Chained Polya window search");
  add_domain(scan);
  add_kind(scan);
  scan->add_option("--cutoff", o.cutoff, "Spectral cutoff")->required();
  scan->add_option("--start", o.start, "1-based start index");
  add_json(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    apply_thread_limit();
    if (*constants) return run_constants(o);
    if (*geometry) return run_geometry(o);
    if (*spectrum) return run_spectrum(o);
    if (*bounds) return run_bounds(o);
    if (*verify) return run_verify(o);
    if (*scan) return run_polya_scan(o);
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {  // invalid_argument, domain_error, out_of_range
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
