#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "reflow_lens/errors.hpp"
#include "reflow_lens/metrology.hpp"
#include "reflow_lens/table3.hpp"

namespace {

using reflow::ProfileSample;
using reflow::SurfaceProfile;

std::vector<ProfileSample> arc(double radius, double center_x, double center_z, double from_deg,
                               double to_deg, int n) {
  std::vector<ProfileSample> s;
  // Walk right to left in angle so x increases.
  for (int i = 0; i < n; ++i) {
    const double a = (to_deg - (to_deg - from_deg) * i / (n - 1)) * reflow::kPi / 180.0;
    s.push_back({center_x + radius * std::cos(a), center_z + radius * std::sin(a)});
  }
  return s;
}

// Mean of |A sin(x)| by dense midpoint averaging; independent of any detrending.
double dense_mean_abs_sine(double amplitude, int periods) {
  const int n = 2'000'000;
  double sum = 0.0;
  const double span = 2.0 * reflow::kPi * periods;
  for (int i = 0; i < n; ++i) sum += std::abs(amplitude * std::sin(span * (i + 0.5) / n));
  return sum / n;
}

TEST(SurfaceProfile, Invariants) {
  EXPECT_THROW(SurfaceProfile({{0, 0}, {1, 0}}), reflow::InsufficientData);
  EXPECT_THROW(SurfaceProfile({{0, 0}, {1, 0}, {1, 0}}), reflow::DomainError);
  EXPECT_THROW(SurfaceProfile({{0, 0}, {2, 0}, {1, 0}}), reflow::DomainError);
  EXPECT_NO_THROW(SurfaceProfile({{0, 0}, {1, 0}, {2, 0}}));
}

TEST(RoughnessRa, FlatIsZero) {
  EXPECT_NEAR(reflow::roughness_ra(SurfaceProfile({{0, 3}, {1, 3}, {2, 3}, {3, 3}})), 0.0, 1e-9);
}

TEST(RoughnessRa, SineMatchesTwoOverPi) {
  const double amplitude_um = 0.0076;
  const int periods = 25;
  const int n = 20000;
  std::vector<ProfileSample> s;
  for (int i = 0; i < n; ++i) {
    const double x = 20.0 * i / n;
    s.push_back({x, amplitude_um * std::sin(2.0 * reflow::kPi * periods * i / n)});
  }
  const double ra_nm = reflow::roughness_ra(SurfaceProfile(s));
  const double oracle_nm = dense_mean_abs_sine(amplitude_um, periods) * 1000.0;
  EXPECT_NEAR(oracle_nm, 2.0 / reflow::kPi * amplitude_um * 1000.0, 1e-6);
  EXPECT_NEAR(ra_nm, oracle_nm, 0.005 * oracle_nm);
}

TEST(RoughnessRa, AffineInvarianceAndScaling) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> noise(0.0, 0.01);
  std::vector<ProfileSample> base;
  for (int i = 0; i < 500; ++i) base.push_back({0.04 * i, noise(rng)});
  const double ra = reflow::roughness_ra(SurfaceProfile(base));

  auto tilted = base;
  for (auto& p : tilted) p.z_um += 3.5 - 0.8 * p.x_um;
  EXPECT_NEAR(reflow::roughness_ra(SurfaceProfile(tilted)), ra, 1e-9 * ra);

  auto scaled = base;
  for (auto& p : scaled) p.z_um *= 3.0;
  EXPECT_NEAR(reflow::roughness_ra(SurfaceProfile(scaled)), 3.0 * ra, 1e-9 * ra);
}

TEST(FitSphere, TopArcOfPublishedLens) {
  const double r = 49.1;
  const auto lens = reflow::fit_sphere_profile(
      SurfaceProfile(arc(r, 0.0, 73.07 - r, 75.0, 105.0, 50)), 0.0);
  EXPECT_NEAR(lens.sphere_diameter, 98.2, 0.1);
  EXPECT_NEAR(lens.sag_height, 73.07, 0.1);
  EXPECT_NEAR(reflow::sag_height(lens.sphere_diameter, lens.contact_angle), lens.sag_height,
              1e-9 * lens.sag_height);
  EXPECT_EQ(lens.convention, reflow::VolumeConvention::SessileDrop);
}

TEST(FitSphere, SemicircleExact) {
  const auto lens =
      reflow::fit_sphere_profile(SurfaceProfile(arc(20.0, 5.0, 3.0, 0.0, 180.0, 101)), 0.0);
  EXPECT_NEAR(lens.sphere_diameter, 40.0, 40.0 * 1e-9);
  EXPECT_NEAR(lens.sag_height, 23.0, 23.0 * 1e-9);
}

TEST(FitSphere, BasePlaneShiftsHeight) {
  const auto samples = arc(30.0, 0.0, 10.0, 60.0, 120.0, 40);
  const auto a = reflow::fit_sphere_profile(SurfaceProfile(samples), 0.0);
  const auto b = reflow::fit_sphere_profile(SurfaceProfile(samples), 5.0);
  EXPECT_NEAR(a.sag_height - b.sag_height, 5.0, 1e-9);
}

TEST(FitSphere, RecoversRadiusOnSmallArcs) {
  for (double extent : {20.0, 30.0, 60.0, 120.0}) {
    const auto lens = reflow::fit_sphere_profile(
        SurfaceProfile(arc(49.1, 2.0, 20.0, 90.0 - extent / 2, 90.0 + extent / 2, 30)));
    EXPECT_NEAR(lens.sphere_diameter / 2, 49.1, 49.1 * 1e-3) << extent;
  }
}

TEST(FitSphere, NoisyArcWithinOnePercent) {
  const double r = 49.1;
  int pass = 0;
  for (int seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 0.1);
    auto samples = arc(r, 0.0, 73.07 - r, 45.0, 135.0, 50);
    for (auto& s : samples) s.z_um += noise(rng);
    const auto lens = reflow::fit_sphere_profile(SurfaceProfile(samples));
    if (std::abs(lens.sphere_diameter / 2 - r) / r < 0.01) ++pass;
  }
  EXPECT_GE(pass, 95);
}

TEST(FitSphere, Errors) {
  std::vector<ProfileSample> line;
  for (int i = 0; i < 10; ++i) line.push_back({1.0 * i, 2.0 + 0.5 * i});
  EXPECT_THROW(reflow::fit_sphere_profile(SurfaceProfile(line)), reflow::DegenerateFit);
  EXPECT_THROW(reflow::fit_sphere_profile(SurfaceProfile(arc(10.0, 0, 0, 60, 120, 4))),
               reflow::InsufficientData);
  // Base plane above the whole circle.
  EXPECT_THROW(reflow::fit_sphere_profile(SurfaceProfile(arc(10.0, 0, 0, 60, 120, 20)), 15.0),
               reflow::ProfileInconsistent);
  EXPECT_THROW(reflow::fit_sphere_profile(SurfaceProfile(arc(10.0, 0, 0, 60, 120, 20)), -25.0),
               reflow::ProfileInconsistent);
}

TEST(CompareToTheory, PublishedErrorColumns) {
  for (const auto& row : reflow::kPublishedTable) {
    const auto theory =
        reflow::make_lens_from_sag(row.theoretical_diameter_um, row.theoretical_height_um);
    const auto cmp = reflow::compare_to_theory(
        {row.experimental_diameter_um, row.experimental_height_um}, theory);
    EXPECT_NEAR(cmp.diameter_error_pct, row.diameter_error_pct, 0.1) << row.pattern_um;
    EXPECT_NEAR(cmp.height_error_pct, row.height_error_pct, 0.1) << row.pattern_um;
    EXPECT_EQ(reflow::round_pct(cmp.diameter_error_pct), row.diameter_error_pct);
    EXPECT_EQ(reflow::round_pct(cmp.height_error_pct), row.height_error_pct);
  }
}

TEST(CompareToTheory, IdenticalIsZero) {
  const auto theory = reflow::make_lens(90.0, reflow::ContactAngle::from_degrees(116.0));
  const auto cmp = reflow::compare_to_theory({theory.sphere_diameter, theory.sag_height}, theory);
  EXPECT_EQ(cmp.diameter_error_pct, 0.0);
  EXPECT_EQ(cmp.height_error_pct, 0.0);
  EXPECT_THROW(reflow::compare_to_theory({10.0, 12.0}, theory), reflow::DomainError);
}

TEST(Table3, ReproducesPredictedColumns) {
  const auto rows = reflow::reproduce_table3();
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    EXPECT_LT(std::abs(row.predicted.sphere_diameter - row.published.theoretical_diameter_um) /
                  row.published.theoretical_diameter_um,
              0.0015)
        << row.published.pattern_um;
  }
}

}  // namespace
