#include "spectral_bounds/polya.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spectral_bounds/bounds.hpp"
#include "spectral_bounds/constants.hpp"
#include "spectral_bounds/format.hpp"

namespace spectral_bounds {

namespace {

constexpr double kTwoPow32 = 2.8284271247461900976;  // 2^{3/2}

void check_setup(const Spectrum& s, const GeometricFunctionals& g, int n, SpectrumKind kind) {
  if (s.kind() != kind)
    throw std::invalid_argument("expected a " + to_string(kind) + " spectrum");
  if (n < 2 || g.dim != n || s.domain().dim() != n)
    throw std::invalid_argument("dimension mismatch between spectrum, functionals and n");
  if (s.size() == 0) throw std::invalid_argument("spectrum is empty");
}

double weyl(const Spectrum& s) {
  const auto n = s.domain().dim();
  return weyl_coefficient(n, volume(s.domain()));
}

// Dirichlet strengthened-inequality correction n c1 j1^2 / (2 (n+2)).
double dirichlet_shift(const GeometricFunctionals& g, int n) {
  return n * c1(n) * g.j1 * g.j1 / (2.0 * (n + 2.0));
}

// Neumann correction coefficient (j1^4 / 2^{3/2}) W (n/3) ((n-2)/2).
double neumann_shift(const GeometricFunctionals& g, int n, double w) {
  const double j1_4 = std::pow(g.j1, 4);
  return j1_4 / kTwoPow32 * w * (n / 3.0) * ((n - 2.0) / 2.0);
}

std::size_t group_of(const std::vector<EigenGroup>& groups, std::size_t index) {
  auto it = std::lower_bound(groups.begin(), groups.end(), index,
                             [](const EigenGroup& grp, std::size_t i) { return grp.last < i; });
  return static_cast<std::size_t>(it - groups.begin());
}

std::optional<std::size_t> first_group_at_least(const std::vector<EigenGroup>& groups,
                                                double value) {
  auto it = std::lower_bound(groups.begin(), groups.end(), value,
                             [](const EigenGroup& grp, double v) { return grp.value < v; });
  if (it == groups.end()) return std::nullopt;
  return static_cast<std::size_t>(it - groups.begin());
}

}  // namespace

bool polya_check(const Spectrum& s, std::size_t k) {
  const int n = s.domain().dim();
  const double w = weyl(s);
  if (s.kind() == SpectrumKind::Dirichlet) {
    const double lambda_k = s.eigenvalue(k);
    return static_cast<double>(k) <= w * std::pow(lambda_k, 0.5 * n);
  }
  if (k < 1) throw std::out_of_range("Neumann Polya check needs k >= 1");
  const double gamma_next = s.eigenvalue(k + 1);
  return w * std::pow(gamma_next, 0.5 * n) <= static_cast<double>(k);
}

ProfileValue f_d(const Spectrum& s, const GeometricFunctionals& g, int n, double lambda) {
  check_setup(s, g, n, SpectrumKind::Dirichlet);
  if (!(lambda > s.eigenvalue(1)) || lambda > s.cutoff())
    throw std::domain_error("f_d: lambda must lie in (lambda_1, cutoff]");
  if (!(lambda > 8.0 * g.j1 * g.j1)) throw std::domain_error("f_d: requires lambda > 8 j1^2");
  const double w = weyl(s);
  const double nd = n;
  const double c = c1(n) * g.j1 * g.j1;
  ProfileValue out;
  out.value = 2.0 / (nd + 2.0) * std::pow(lambda, 1.0 + 0.5 * nd) * w *
                  std::max(0.0, 1.0 - c / (2.0 * lambda)) -
              riesz_mean(s, lambda);
  out.derivative = w * std::pow(lambda, 0.5 * nd) * (1.0 - nd * c / (2.0 * (nd + 2.0) * lambda)) -
                   static_cast<double>(counting_function(s, lambda));
  return out;
}

ProfileValue f_n(const Spectrum& s, const GeometricFunctionals& g, int n, double gamma) {
  check_setup(s, g, n, SpectrumKind::Neumann);
  if (n < 3) throw std::domain_error("f_n: requires n >= 3");
  if (!(gamma > 4.0 * g.j1 * g.j1)) throw std::domain_error("f_n: requires gamma > 4 j1^2");
  if (gamma > s.cutoff()) throw std::domain_error("f_n: gamma exceeds the cutoff");
  const double w = weyl(s);
  const double nd = n;
  const double j1_4 = std::pow(g.j1, 4);
  ProfileValue out;
  out.value = riesz_mean(s, gamma) -
              w * 2.0 * std::pow(gamma, 1.0 + 0.5 * nd) / (nd + 2.0) *
                  (1.0 + nd * (nd + 2.0) / 6.0 * j1_4 / kTwoPow32 / (gamma * gamma));
  out.derivative = static_cast<double>(counting_function(s, gamma)) -
                   w * std::pow(gamma, 0.5 * nd) -
                   neumann_shift(g, n, w) * std::pow(gamma, 0.5 * nd - 2.0);
  return out;
}

double dirichlet_window_threshold(const GeometricFunctionals& g, int n, double lambda_j) {
  if (n < 2 || g.dim != n) throw std::invalid_argument("dimension mismatch");
  if (!(lambda_j > first_eigenvalue_threshold(g)))
    throw std::domain_error("window start must exceed the first-eigenvalue threshold");
  const double nd = n;
  const double ratio = 2.0 * std::pow(lambda_j, 1.0 + 0.5 * nd) / (c1(n) * g.j1 * g.j1);
  return std::pow(ratio, 2.0 / nd);
}

double neumann_window_threshold(const GeometricFunctionals& g, int n, std::int64_t j,
                                double gamma_j) {
  if (n < 3) throw std::invalid_argument("Neumann windows need n >= 3");
  if (g.dim != n) throw std::invalid_argument("dimension mismatch");
  if (j < 1) throw std::invalid_argument("index j must be >= 1");
  if (!(gamma_j >= 4.0 * g.j1 * g.j1))
    throw std::domain_error("Neumann window start must satisfy gamma_j >= 4 j1^2");
  const double nd = n;
  const double w = weyl_coefficient(n, g.volume);
  const double first = std::pow(static_cast<double>(j) / w, 2.0 * (nd + 2.0) / (nd * (nd - 2.0)));
  const double second = std::pow(3.0 * std::pow((nd + 2.0) / 2.0, 2.0 / nd) * kTwoPow32 /
                                     (nd * std::pow(g.j1, 4)),
                                 2.0 / (nd - 2.0));
  return first * second;
}

std::vector<EigenGroup> group_eigenvalues(const Spectrum& s, double relative_tolerance) {
  std::vector<EigenGroup> groups;
  const auto ev = s.eigenvalues();
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (!groups.empty() && ev[i] - groups.back().value <= relative_tolerance * ev[i]) {
      groups.back().last = i + 1;
    } else {
      groups.push_back({ev[i], i + 1, i + 1});
    }
  }
  return groups;
}

WindowScan scan_dirichlet_windows(const Spectrum& s, const GeometricFunctionals& g, int n,
                                  std::size_t start) {
  check_setup(s, g, n, SpectrumKind::Dirichlet);
  const auto groups = group_eigenvalues(s);
  const double w = weyl(s);
  const double shift = dirichlet_shift(g, n);
  const double half_n = 0.5 * n;
  WindowScan scan;

  std::size_t j = start;
  while (true) {
    const std::size_t gi = group_of(groups, j);
    PolyaWindow win;
    win.kind = SpectrumKind::Dirichlet;
    win.start_index = j;
    win.start_eig = s.eigenvalue(j);
    win.threshold = dirichlet_window_threshold(g, n, win.start_eig);
    const auto end = first_group_at_least(groups, win.threshold);
    win.truncated = !end.has_value();
    if (win.truncated && scan.windows.empty()) {
      scan.warnings.push_back("window threshold " + format_real(win.threshold) +
                              " exceeds the cutoff " + format_real(s.cutoff()) +
                              "; no window covered");
      return scan;
    }

    std::optional<std::size_t> hit_group;
    for (std::size_t gg = gi; gg + 1 < groups.size(); ++gg) {
      const EigenGroup& next = groups[gg + 1];
      if (end && gg + 1 > *end) break;
      const double k = static_cast<double>(groups[gg].last);
      const double mu = next.value;
      const double lhs = w * std::pow(mu, half_n);
      const double rhs_shift = w * shift * std::pow(mu, half_n - 1.0);
      const double slack = lhs - k - rhs_shift;
      if (slack >= 0.0) {
        win.found_index = groups[gg].last;
        win.found_eig = mu;
        win.strengthened_slack = slack;
        win.statement_form_holds =
            lhs - (static_cast<double>(next.last) - 1.0) - rhs_shift >= 0.0;
        hit_group = gg + 1;
        break;
      }
    }
    scan.windows.push_back(win);
    if (!hit_group) {
      if (!win.truncated)
        scan.warnings.push_back("no strengthened-inequality hit in window starting at index " +
                                std::to_string(j));
      break;
    }
    if (win.truncated) break;
    j = groups[*hit_group].first;
  }
  return scan;
}

WindowScan scan_neumann_windows(const Spectrum& s, const GeometricFunctionals& g, int n,
                                std::optional<std::size_t> start) {
  check_setup(s, g, n, SpectrumKind::Neumann);
  if (n < 3) throw std::invalid_argument("Neumann window scans need n >= 3");
  const auto groups = group_eigenvalues(s);
  const double w = weyl(s);
  const double shift = neumann_shift(g, n, w);
  const double half_n = 0.5 * n;
  const double floor_value = 4.0 * g.j1 * g.j1;
  WindowScan scan;

  std::size_t j = 0;
  if (start) {
    j = *start;
    if (!(s.eigenvalue(j) > floor_value))
      throw std::domain_error("Neumann scan start must satisfy gamma_j > 4 j1^2");
  } else {
    auto first = std::find_if(groups.begin(), groups.end(),
                              [&](const EigenGroup& grp) { return grp.value > floor_value; });
    if (first == groups.end()) {
      scan.warnings.push_back("no eigenvalue above 4 j1^2 below the cutoff");
      return scan;
    }
    j = first->first;
  }

  while (true) {
    const std::size_t gi = group_of(groups, j);
    PolyaWindow win;
    win.kind = SpectrumKind::Neumann;
    win.start_index = j;
    win.start_eig = s.eigenvalue(j);
    win.threshold = neumann_window_threshold(g, n, static_cast<std::int64_t>(j), win.start_eig);
    const auto end = first_group_at_least(groups, win.threshold);
    win.truncated = !end.has_value();
    if (win.truncated && scan.windows.empty()) {
      scan.warnings.push_back("window threshold " + format_real(win.threshold) +
                              " exceeds the cutoff " + format_real(s.cutoff()) +
                              "; no window covered");
      return scan;
    }

    std::optional<std::size_t> hit_group;
    for (std::size_t gg = gi; gg < groups.size(); ++gg) {
      if (end && gg > *end) break;
      const EigenGroup& grp = groups[gg];
      const double gamma = grp.value;
      const double weyl_term = w * std::pow(gamma, half_n);
      const double corr = shift * std::pow(gamma, half_n - 2.0);
      const double slack = static_cast<double>(grp.last) - corr - weyl_term;
      if (slack >= 0.0) {
        win.found_index = grp.last;
        win.found_eig = gamma;
        win.strengthened_slack = slack;
        win.statement_form_holds = static_cast<double>(grp.first) - corr - weyl_term >= 0.0;
        hit_group = gg;
        break;
      }
    }
    scan.windows.push_back(win);
    if (!hit_group) {
      if (!win.truncated)
        scan.warnings.push_back("no strengthened-inequality hit in window starting at index " +
                                std::to_string(j));
      break;
    }
    if (win.truncated || *hit_group + 1 >= groups.size()) break;
    j = groups[*hit_group + 1].first;
  }
  return scan;
}

}  // namespace spectral_bounds
