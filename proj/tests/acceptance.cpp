// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exits 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "spectral_bounds/bessel.hpp"
#include "spectral_bounds/bounds.hpp"
#include "spectral_bounds/constants.hpp"
#include "spectral_bounds/polya.hpp"
#include "spectral_bounds/report.hpp"
#include "spectral_bounds/spectrum.hpp"

using namespace spectral_bounds;

namespace {

constexpr double kPi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& note) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + note);
  }
  void info(const std::string& note) { notes.push_back("     " + note); }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

int report(int id, const char* title, const Outcome& o) {
  std::printf("criterion %2d %s: %s\n", id, o.pass ? "PASS" : "FAIL", title);
  for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
  std::fflush(stdout);
  return o.pass ? 0 : 1;
}

// 1. Gamma factor table.
Outcome constants_table() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<std::pair<int, double>> table = {
      {3, 1.402}, {4, 1.341}, {5, 1.248}, {100, 1.045}, {2000, 1.016}, {100000, 1.014}};
  for (const auto& [n, expected] : table) {
    const double got = stirling_factor(n);
    o.require(std::fabs(got - expected) <= 1e-3,
              fmt("n=%d stirling_factor=%.6f expected %.3f +- 0.001", n, got, expected));
  }
  const double t = seconds_since(start);
  o.require(t < 1.0, fmt("runtime %.4f s < 1 s", t));
  return o;
}

// 2. C1(2).
Outcome c1_two() {
  Outcome o;
  const double c = c1(2);
  o.require(c == 157.0 / 480.0, fmt("c1(2) = %.17g == 157/480", c));
  o.require(c * 480.0 == 157.0, "480 c1(2) == 157 exactly");
  o.require(c / 8.0 > 1.0 / 32.0, fmt("c1(2)/8 = %.6f > 1/32 = 0.03125", c / 8.0));
  return o;
}

// 3. t0 against the closed form (n = 2) and invariants (n = 3..8).
Outcome t0_oracle() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> lam(0.05, 1e4);
  std::uniform_real_distribution<double> frac(1e-3, 0.999);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double lambda = lam(rng);
    const double j1 = frac(rng) * std::sqrt(2.0 * lambda);
    worst = std::max(worst, std::fabs(solve_t0(2, lambda, j1).t0 - oracle::t0_n2(lambda, j1)));
  }
  o.require(worst <= 1e-9, fmt("n=2: max |t0 - closed form| over 1000 samples = %.3e <= 1e-9", worst));
  for (int n = 3; n <= 8; ++n) {
    double worst_residual = 0.0;
    int bracket_failures = 0;
    for (int i = 0; i < 1000; ++i) {
      const double lambda = lam(rng);
      const double j1 = frac(rng) * std::sqrt((n + 2.0) * lambda / n);
      const auto sol = solve_t0(n, lambda, j1);
      const double root = std::sqrt(lambda);
      worst_residual = std::max(worst_residual, sol.residual / theta(n, lambda, root));
      if (!(root - j1 < sol.t0 && sol.t0 < root - j1 / 2.0)) ++bracket_failures;
    }
    o.require(worst_residual < 1e-10 && bracket_failures == 0,
              fmt("n=%d: max residual / theta(sqrt(lambda)) = %.3e, bracket failures %d", n,
                  worst_residual, bracket_failures));
  }
  return o;
}

struct Case {
  const char* domain;
  SpectrumKind kind;
  double cutoff;
};

const std::vector<Case> kDirichletCases = {
    {"box:1,1", SpectrumKind::Dirichlet, 5e4},   {"box:1,2", SpectrumKind::Dirichlet, 2e4},
    {"box:1,1,1", SpectrumKind::Dirichlet, 5e3}, {"box:1,2,3", SpectrumKind::Dirichlet, 1e3},
    {"disk:1", SpectrumKind::Dirichlet, 1e4},    {"ball3:1", SpectrumKind::Dirichlet, 2e3}};
const std::vector<Case> kNeumannCases = {{"box:1,1", SpectrumKind::Neumann, 5e4},
                                         {"box:1,1,1", SpectrumKind::Neumann, 5e3},
                                         {"box:1,1,1,1,1", SpectrumKind::Neumann, 400.0},
                                         {"disk:1", SpectrumKind::Neumann, 1e4}};

bool is_riesz_check(const std::string& id) {
  return id == "LAPTEV_D" || id == "IMPROVED_D" || id == "SHARP_D" || id == "N2_CLOSED" ||
         id == "LAPTEV_N" || id == "IMPROVED_N";
}

// 4. Riesz-mean bounds against exact spectra.
Outcome riesz_validity() {
  Outcome o;
  const auto start = Clock::now();
  std::vector<Case> cases = kDirichletCases;
  cases.insert(cases.end(), kNeumannCases.begin(), kNeumannCases.end());
  for (const auto& c : cases) {
    const auto domain = parse_domain(c.domain);
    const auto s = enumerate_spectrum(domain, c.kind, c.cutoff);
    const auto r = verify(s, functionals(domain), {100, 1});
    std::string line = fmt("%s %s cutoff %g, %zu eigenvalues:", c.domain, to_string(c.kind).c_str(),
                           c.cutoff, s.size());
    bool ok = s.size() >= 1000 && s.size() <= 100000;
    for (const auto& [id, slack] : r.min_slack_per_bound) {
      if (!is_riesz_check(id)) continue;
      ok = ok && slack >= 0.0;
      line += fmt(" %s=%.4g", id.c_str(), slack);
    }
    o.require(ok, line);
  }
  const double t = seconds_since(start);
  o.require(t < 60.0, fmt("runtime %.2f s < 60 s", t));
  return o;
}

// 5. Ordering of the Riesz-mean bounds on the same grids.
Outcome riesz_ordering() {
  Outcome o;
  constexpr double kRel = 1e-12;
  for (const auto& c : kDirichletCases) {
    const auto domain = parse_domain(c.domain);
    const auto g = functionals(domain);
    const auto s = enumerate_spectrum(domain, c.kind, c.cutoff);
    int sharp_above = 0;
    int improved_above = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (double x : verification_grid(s, 100)) {
      const double l = dirichlet_riesz_upper(g, g.dim, x, DirichletRieszVariant::Laptev).value;
      const double i = dirichlet_riesz_upper(g, g.dim, x, DirichletRieszVariant::Improved).value;
      const double sh = dirichlet_riesz_upper(g, g.dim, x, DirichletRieszVariant::Sharp).value;
      const double slack_si = (i - sh) / l;
      const double slack_il = (l - i) / l;
      worst = std::min({worst, slack_si, slack_il});
      if (slack_si < -kRel) ++sharp_above;
      if (slack_il < -kRel) ++improved_above;
    }
    o.require(sharp_above == 0 && improved_above == 0,
              fmt("%s dirichlet: sharp > improved at %d/100, improved > laptev at %d/100, "
                  "worst relative slack %.3e",
                  c.domain, sharp_above, improved_above, worst));
  }
  for (const auto& c : kNeumannCases) {
    const auto domain = parse_domain(c.domain);
    const auto g = functionals(domain);
    const auto s = enumerate_spectrum(domain, c.kind, c.cutoff);
    int below = 0;
    for (double x : verification_grid(s, 100)) {
      const double l = neumann_riesz_lower(g, g.dim, x, NeumannRieszVariant::Laptev).value;
      const double i = neumann_riesz_lower(g, g.dim, x, NeumannRieszVariant::Improved).value;
      if ((i - l) / l < -kRel) ++below;
    }
    o.require(below == 0, fmt("%s neumann: improved < laptev at %d/100", c.domain, below));
  }
  return o;
}

// 6. Melas versus Berezin-Li-Yau partial sums on the unit square.
Outcome melas_vs_li_yau() {
  Outcome o;
  const auto domain = parse_domain("box:1,1");
  const auto g = functionals(domain);
  const auto s = enumerate_spectrum(domain, SpectrumKind::Dirichlet, 1.5e5);
  o.require(s.size() >= 10000, fmt("%zu eigenvalues enumerated (need 1e4)", s.size()));
  int failures = 0;
  const std::int64_t k_end = std::min<std::int64_t>(10000, static_cast<std::int64_t>(s.size()));
  for (std::int64_t k = 1; k <= k_end; ++k) {
    const double sum = partial_sum(s, static_cast<std::size_t>(k));
    const double melas = dirichlet_sum_lower(g, 2, k, DirichletSumVariant::Melas).value;
    const double ly = dirichlet_sum_lower(g, 2, k, DirichletSumVariant::BerezinLiYau).value;
    if (!(sum >= melas && melas >= ly)) ++failures;
  }
  o.require(failures == 0, fmt("sum >= melas >= berezin_li_yau for k <= 1e4: %d failures", failures));
  const double exact = partial_sum(s, 3);
  const double melas = dirichlet_sum_lower(g, 2, 3, DirichletSumVariant::Melas).value;
  const double ly = dirichlet_sum_lower(g, 2, 3, DirichletSumVariant::BerezinLiYau).value;
  o.require(std::fabs(exact - 118.435) < 1e-3, fmt("k=3 exact %.6f (12 pi^2 = 118.435)", exact));
  o.require(std::fabs(melas - 57.112) < 1e-3, fmt("k=3 melas %.6f (57.112)", melas));
  o.require(std::fabs(ly - 56.549) < 1e-3, fmt("k=3 berezin_li_yau %.6f (18 pi = 56.549)", ly));
  return o;
}

// 7. Polya's inequality on tiling boxes.
Outcome polya_ground_truth() {
  Outcome o;
  const std::vector<Case> cases = {
      {"box:1,1", SpectrumKind::Dirichlet, 5e4},   {"box:1,1", SpectrumKind::Neumann, 5e4},
      {"box:1,2", SpectrumKind::Dirichlet, 2e4},   {"box:1,2", SpectrumKind::Neumann, 2e4},
      {"box:1,1,1", SpectrumKind::Dirichlet, 5e3}, {"box:1,1,1", SpectrumKind::Neumann, 5e3},
      {"box:1,2,3", SpectrumKind::Dirichlet, 1e3}, {"box:1,2,3", SpectrumKind::Neumann, 1e3},
      {"box:1,1,1,1,1", SpectrumKind::Dirichlet, 600.0},
      {"box:1,1,1,1,1", SpectrumKind::Neumann, 400.0}};
  std::size_t total = 0;
  std::size_t failures = 0;
  for (const auto& c : cases) {
    const auto s = enumerate_spectrum(parse_domain(c.domain), c.kind, c.cutoff);
    const std::size_t last = c.kind == SpectrumKind::Dirichlet ? s.size() : s.size() - 1;
    std::size_t local = 0;
    for (std::size_t k = 1; k <= last; ++k)
      if (!polya_check(s, k)) ++local;
    total += last;
    failures += local;
    o.info(fmt("%s %s: %zu indices, %zu failures", c.domain, to_string(c.kind).c_str(), last, local));
  }
  o.require(failures == 0 && total >= 10000,
            fmt("%zu indices checked, %zu failures", total, failures));
  return o;
}

// 8. Window scans.
Outcome window_scans() {
  Outcome o;
  {
    const auto domain = parse_domain("box:1,1");
    const auto s = enumerate_spectrum(domain, SpectrumKind::Dirichlet, 2e4);
    const auto scan = scan_dirichlet_windows(s, functionals(domain), 2);
    std::size_t hits = 0;
    for (const auto& w : scan.windows) {
      if (w.found_index) ++hits;
      o.info(fmt("box:1,1 window from j=%zu (%.6g), threshold %.6g, hit k=%zu at %.6g%s",
                 w.start_index, w.start_eig, w.threshold, w.found_index.value_or(0),
                 w.found_eig.value_or(0.0), w.truncated ? ", threshold beyond cutoff" : ""));
    }
    o.require(scan.windows.size() >= 3 && hits == scan.windows.size(),
              fmt("box:1,1 dirichlet cutoff 2e4: %zu windows, %zu with a hit", scan.windows.size(), hits));
    const double t = scan.windows.empty() ? 0.0 : scan.windows[0].threshold;
    o.require(std::fabs(t - 1588.3) < 0.05, fmt("first threshold %.4f (1588.3)", t));
  }
  {
    const auto domain = parse_domain("box:1,1,1,1,1");
    const auto s = enumerate_spectrum(domain, SpectrumKind::Neumann, 8600.0);
    const auto scan = scan_neumann_windows(s, functionals(domain), 5);
    std::size_t hits = 0;
    for (const auto& w : scan.windows) {
      if (w.found_index) ++hits;
      o.info(fmt("box:1,1,1,1,1 window from j=%zu (%.6g), threshold %.6g, hit k=%zu at %.6g%s",
                 w.start_index, w.start_eig, w.threshold, w.found_index.value_or(0),
                 w.found_eig.value_or(0.0), w.truncated ? ", threshold beyond cutoff" : ""));
    }
    o.require(!scan.windows.empty() && scan.windows[0].found_index.has_value() &&
                  !scan.windows[0].truncated,
              fmt("box:1,1,1,1,1 neumann cutoff 8600 (%zu eigenvalues): %zu windows, %zu with a hit",
                  s.size(), scan.windows.size(), hits));
  }
  return o;
}

// 9. Kroger index conventions.
Outcome kroger_conventions() {
  Outcome o;
  const auto domain = parse_domain("box:1,1");
  const auto s = enumerate_spectrum(domain, SpectrumKind::Neumann, 2e4);
  const auto r = verify(s, functionals(domain), {100, 1000});
  const double shifted = r.min_slack_per_bound.at("KROGER_SUM_SHIFTED");
  const double eig = r.min_slack_per_bound.at("KROGER_EIG");
  const auto& printed = *r.kroger_sum_printed;
  o.require(shifted >= 0.0, fmt("sum_{j<=k} gamma_j <= bound for k <= 1000: min slack %.6g", shifted));
  o.require(!printed.holds_all_k && printed.first_failure_k == 1,
            fmt("printed sum_{j<=k+1} form fails first at k=%lld (min slack %.6g)",
                static_cast<long long>(printed.first_failure_k.value_or(-1)), printed.min_slack));
  o.require(printed.k_checked == 1000, fmt("printed form evaluated up to k=%lld",
                                           static_cast<long long>(printed.k_checked)));
  o.require(eig >= 0.0, fmt("kroger_eigenvalue holds for k <= 1000: min slack %.6g", eig));
  return o;
}

// 10. Bessel zeros against reference values and an independent series oracle.
Outcome bessel_zeros_check() {
  Outcome o;
  struct Row {
    const char* name;
    int order;
    ZeroKind kind;
    double expected;
    std::function<long double(long double)> series;
  };
  const std::vector<Row> rows = {
      {"j_{0,1}", 0, ZeroKind::Function, 2.404825557695773,
       [](long double x) { return oracle::bessel_j(0, x); }},
      {"j_{1,1}", 1, ZeroKind::Function, 3.831705970207512,
       [](long double x) { return oracle::bessel_j(1, x); }},
      {"j'_{1,1}", 1, ZeroKind::Derivative, 1.841183781340659,
       [](long double x) { return oracle::bessel_j_prime(1, x); }}};
  for (const auto& row : rows) {
    const double got = bessel_zeros(row.order, row.kind, row.expected + 0.5).zeros.at(0);
    const double ref = oracle::zeros_by_bisection(row.series, 0.5, row.expected + 0.5).at(0);
    o.require(std::fabs(got - row.expected) <= 1e-9 && std::fabs(got - ref) <= 1e-9,
              fmt("%s = %.15f (reference %.15f, bisection oracle %.15f)", row.name, got,
                  row.expected, ref));
  }
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  failed += report(1, "Gamma-factor table within 0.001", constants_table());
  failed += report(2, "c1(2) = 157/480 and c1(2)/8 > 1/32", c1_two());
  failed += report(3, "t0 closed form and invariants", t0_oracle());
  failed += report(4, "Riesz-mean bounds hold on exact spectra", riesz_validity());
  failed += report(5, "sharp <= improved <= laptev, improved_n >= laptev_n", riesz_ordering());
  failed += report(6, "Melas and Berezin-Li-Yau partial sums", melas_vs_li_yau());
  failed += report(7, "Polya inequality on tiling boxes", polya_ground_truth());
  failed += report(8, "window scans", window_scans());
  failed += report(9, "Kroger index conventions", kroger_conventions());
  failed += report(10, "Bessel zeros", bessel_zeros_check());
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
