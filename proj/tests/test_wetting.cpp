#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "reflow_lens/errors.hpp"
#include "reflow_lens/wetting.hpp"

namespace {

using reflow::AngleClass;
using reflow::SurfaceEnergies;
using reflow::WettingRegime;

TEST(YoungAngle, Anchors) {
  EXPECT_DOUBLE_EQ(reflow::young_contact_angle({30.0, 30.0, 72.0}).degrees(), 90.0);
  // cos(116 deg) = -0.43837...
  EXPECT_NEAR(reflow::young_contact_angle({10.0, 10.0 + 0.4384 * 50.0, 50.0}).degrees(), 116.0,
              0.1);
  const double tiny = reflow::young_contact_angle({1.0 + (1.0 - 1e-12), 1.0, 1.0}).degrees();
  EXPECT_GT(tiny, 0.0);
  EXPECT_LT(tiny, 1e-3);
}

TEST(YoungAngle, NoEquilibrium) {
  EXPECT_THROW(reflow::young_contact_angle({3.0, 1.0, 1.0}), reflow::NoEquilibriumAngle);
  EXPECT_THROW(reflow::young_contact_angle({2.0, 1.0, 1.0}), reflow::NoEquilibriumAngle);
  EXPECT_THROW(reflow::young_contact_angle({0.0, 1.0, 1.0}), reflow::NoEquilibriumAngle);
  EXPECT_THROW(reflow::young_contact_angle({1.0, 1.0, 0.0}), reflow::DomainError);
}

TEST(ClassifyWetting, Regimes) {
  EXPECT_EQ(reflow::classify_wetting({5.0 + 2.0 * 3.0, 5.0, 3.0}), WettingRegime::Spreading);
  EXPECT_EQ(reflow::classify_wetting({5.0, 5.0, 3.0}), WettingRegime::PartialWetting);
  EXPECT_EQ(reflow::classify_wetting({5.0 - 2.0 * 3.0, 5.0, 3.0}), WettingRegime::Beading);
  // Boundaries: cos = +/-1 exactly is not strictly beyond either inequality.
  EXPECT_EQ(reflow::classify_wetting({8.0, 5.0, 3.0}), WettingRegime::PartialWetting);
  EXPECT_EQ(reflow::classify_wetting({2.0, 5.0, 3.0}), WettingRegime::PartialWetting);
}

TEST(ClassifyWetting, AgreesWithYoungAngle) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> energy(-100.0, 100.0);
  std::uniform_real_distribution<double> tension(0.1, 80.0);
  for (int i = 0; i < 10000; ++i) {
    const SurfaceEnergies e{energy(rng), energy(rng), tension(rng)};
    const double arg = (e.solid_air - e.liquid_solid) / e.air_liquid;
    const auto regime = reflow::classify_wetting(e);
    if (arg > 1.0) {
      EXPECT_EQ(regime, WettingRegime::Spreading);
    } else if (arg < -1.0) {
      EXPECT_EQ(regime, WettingRegime::Beading);
    } else {
      EXPECT_EQ(regime, WettingRegime::PartialWetting);
    }
    if (std::abs(arg) < 1.0) {
      EXPECT_NO_THROW(reflow::young_contact_angle(e));
    } else {
      EXPECT_THROW(reflow::young_contact_angle(e), reflow::NoEquilibriumAngle);
    }
  }
}

TEST(YoungAngle, ScaleInvariance) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double sal = 20.0 + 50.0 * std::abs(unit(rng));
    const SurfaceEnergies e{unit(rng) * 40.0, unit(rng) * 40.0, sal};
    for (int p = -20; p <= 20; p += 5) {
      const double lambda = std::ldexp(1.0, p);
      const SurfaceEnergies scaled{e.solid_air * lambda, e.liquid_solid * lambda,
                                   e.air_liquid * lambda};
      EXPECT_EQ(reflow::classify_wetting(scaled), reflow::classify_wetting(e));
      if (reflow::classify_wetting(e) == WettingRegime::PartialWetting &&
          std::abs((e.solid_air - e.liquid_solid) / e.air_liquid) < 1.0) {
        EXPECT_EQ(reflow::young_contact_angle(scaled).degrees(),
                  reflow::young_contact_angle(e).degrees());
      }
    }
  }
}

TEST(YoungAngle, DecreasesWithSolidEnergy) {
  double previous = 180.0;
  for (double ssa = -9.9; ssa < 10.0; ssa += 0.1) {
    const double theta = reflow::young_contact_angle({ssa, 0.0, 10.0}).degrees();
    EXPECT_LT(theta, previous);
    previous = theta;
  }
}

TEST(ClassifyAngle, Labels) {
  const auto c = [](double d) {
    return reflow::classify_angle(reflow::ContactAngle::from_degrees(d));
  };
  EXPECT_EQ(c(116.0), AngleClass::Hydrophobic);
  EXPECT_EQ(c(150.0), AngleClass::SuperHydrophobic);
  EXPECT_EQ(c(89.999), AngleClass::Hydrophilic);
  EXPECT_EQ(c(90.0), AngleClass::Hydrophobic);
  EXPECT_EQ(c(149.999), AngleClass::Hydrophobic);
  EXPECT_EQ(reflow::to_string(AngleClass::SuperHydrophobic), "super-hydrophobic");
}

}  // namespace
