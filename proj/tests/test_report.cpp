#include <gtest/gtest.h>

#include <cmath>

#include "spectral_bounds/report.hpp"

using namespace spectral_bounds;

namespace {
Spectrum spectrum(const char* spec, SpectrumKind kind, double cutoff) {
  return enumerate_spectrum(parse_domain(spec), kind, cutoff);
}
}  // namespace

TEST(Grid, EndpointsAndSpacing) {
  const auto s = spectrum("box:1,1", SpectrumKind::Dirichlet, 500.0);
  const auto grid = verification_grid(s, 100);
  ASSERT_EQ(grid.size(), 100u);
  EXPECT_DOUBLE_EQ(grid.front(), s.eigenvalue(1) * (1.0 + 1e-9));
  EXPECT_EQ(grid.back(), 500.0);
  for (std::size_t i = 1; i < grid.size(); ++i) EXPECT_GT(grid[i], grid[i - 1]);
  EXPECT_THROW(verification_grid(s, 1), std::invalid_argument);
}

TEST(Grid, NeumannStartsAtSecondEigenvalue) {
  const auto s = spectrum("box:1,1", SpectrumKind::Neumann, 500.0);
  EXPECT_DOUBLE_EQ(verification_grid(s, 10).front(), s.eigenvalue(2) * (1.0 + 1e-9));
}

TEST(Verify, SquareDirichletPasses) {
  const auto s = spectrum("box:1,1", SpectrumKind::Dirichlet, 500.0);
  const auto r = verify(s, functionals(s.domain()), {100, 1000});
  EXPECT_TRUE(r.overall_pass);
  for (const char* id : {"LAPTEV_D", "IMPROVED_D", "SHARP_D", "N2_CLOSED", "LY_SUM", "MELAS_SUM",
                         "LY_EIG", "IMPROVED_EIG"}) {
    ASSERT_TRUE(r.min_slack_per_bound.count(id)) << id;
    EXPECT_GE(r.min_slack_per_bound.at(id), 0.0) << id;
  }
  EXPECT_FALSE(r.kroger_sum_printed.has_value());
}

TEST(Verify, ReportInvariants) {
  const auto s = spectrum("disk:1", SpectrumKind::Neumann, 800.0);
  const auto r = verify(s, functionals(s.domain()), {50, 200});
  bool all = true;
  for (const auto& c : r.checks) {
    all = all && c.pass;
    EXPECT_EQ(c.pass, c.slack >= 0.0);
    EXPECT_GE(c.slack, r.min_slack_per_bound.at(c.bound_id));
  }
  EXPECT_EQ(all, r.overall_pass);
}

TEST(Verify, KrogerConventions) {
  const auto s = spectrum("box:1,1", SpectrumKind::Neumann, 20000.0);
  const auto r = verify(s, functionals(s.domain()), {20, 1000});
  EXPECT_TRUE(r.overall_pass);
  EXPECT_GE(r.min_slack_per_bound.at("KROGER_SUM_SHIFTED"), 0.0);
  EXPECT_GE(r.min_slack_per_bound.at("KROGER_EIG"), 0.0);
  ASSERT_TRUE(r.kroger_sum_printed.has_value());
  EXPECT_FALSE(r.kroger_sum_printed->holds_all_k);
  EXPECT_EQ(r.kroger_sum_printed->first_failure_k, 1);
  EXPECT_EQ(r.kroger_sum_printed->k_checked, 1000);
}

TEST(Verify, DeterministicAndRoundTrips) {
  const auto s = spectrum("box:1,2", SpectrumKind::Dirichlet, 2000.0);
  const auto g = functionals(s.domain());
  const auto a = to_json(verify(s, g, {64, 300})).dump();
  const auto b = to_json(verify(s, g, {64, 300})).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(nlohmann::ordered_json::parse(a).dump(), a);
}

TEST(Json, WindowScanShape) {
  const auto s = spectrum("box:1,1", SpectrumKind::Dirichlet, 2e4);
  const auto j = to_json(scan_dirichlet_windows(s, functionals(s.domain()), 2));
  ASSERT_TRUE(j.contains("windows"));
  ASSERT_TRUE(j.contains("warnings"));
  const auto& w = j["windows"][0];
  for (const char* key : {"kind", "start_index", "start_eig", "threshold", "found_index", "found_eig",
                          "strengthened_slack", "truncated", "statement_form_holds"})
    EXPECT_TRUE(w.contains(key)) << key;
}

TEST(Json, RealsHaveAtMostFifteenDigits) {
  const auto j = to_json(functionals(parse_domain("box:1,1")));
  const auto text = j.dump();
  EXPECT_NE(text.find("0.166666666666667"), std::string::npos);
}
