#include <gtest/gtest.h>

#include <random>

#include "reflow_lens/errors.hpp"
#include "reflow_lens/recipe.hpp"
#include "reflow_lens/recipe_json.hpp"

namespace {

using reflow::ProcessRecipe;
using reflow::ProcessStep;
using reflow::Severity;
using reflow::StepKind;

constexpr std::size_t kLastBake = 4;
constexpr std::size_t kRamp = 5;
constexpr std::size_t kHold = 6;

TEST(ReferenceRecipe, MatchesProcessTable) {
  const auto r = reflow::reference_recipe();
  ASSERT_EQ(r.steps.size(), 8u);
  EXPECT_EQ(r.steps[0].kind, StepKind::Clean);
  ASSERT_EQ(r.steps[1].spin_segments.size(), 2u);
  EXPECT_EQ(r.steps[1].spin_segments[0], (reflow::SpinSegment{1000.0, 10.0}));
  EXPECT_EQ(r.steps[1].spin_segments[1], (reflow::SpinSegment{2000.0, 40.0}));
  EXPECT_EQ(*r.steps[kLastBake].temperature_c, 260.0);
  EXPECT_GE(*r.steps[kLastBake].duration_min, 10.0);
  EXPECT_LE(*r.steps[kLastBake].duration_min, 15.0);
  EXPECT_EQ(r.steps[kHold].kind, StepKind::Reflow);
  EXPECT_EQ(*r.steps[kHold].temperature_c, 160.0);
  EXPECT_EQ(*r.steps[kHold].duration_min, 15.0);
  EXPECT_EQ(*r.steps[kRamp].ramp_from_c, 25.0);
}

TEST(ValidateRecipe, ReferenceIsClean) {
  const auto report = reflow::validate_recipe(reflow::reference_recipe());
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.error_count(), 0u);
  EXPECT_EQ(report.warning_count(), 0u);
}

TEST(ValidateRecipe, LongHighTemperatureBakeIsPeelOff) {
  auto r = reflow::reference_recipe();
  r.steps[kLastBake].duration_min = 40.0;
  const auto report = reflow::validate_recipe(r);
  ASSERT_EQ(report.findings.size(), 1u);
  EXPECT_EQ(report.findings[0].severity, Severity::Error);
  EXPECT_EQ(report.findings[0].rule_id, "R1");
  EXPECT_EQ(report.findings[0].step_index, kLastBake);

  r.steps[kLastBake].duration_min = 30.0;
  EXPECT_EQ(reflow::validate_recipe(r).findings.at(0).rule_id, "R1");
  r.steps[kLastBake].duration_min = 29.9;
  EXPECT_TRUE(reflow::validate_recipe(r).passed());
  // Low-temperature bakes can run long.
  r = reflow::reference_recipe();
  r.steps[2].duration_min = 60.0;
  EXPECT_TRUE(reflow::validate_recipe(r).passed());
}

TEST(ValidateRecipe, PeelOffIsMonotoneInDuration) {
  auto r = reflow::reference_recipe();
  bool flagged = false;
  for (double minutes = 5.0; minutes <= 90.0; minutes += 2.5) {
    r.steps[3].duration_min = minutes;
    const auto report = reflow::validate_recipe(r);
    const bool now = !report.findings.empty() && report.findings[0].rule_id == "R1";
    EXPECT_FALSE(flagged && !now) << minutes;
    flagged = now;
  }
  EXPECT_TRUE(flagged);
}

TEST(ValidateRecipe, FastRampIsThermalCrack) {
  auto r = reflow::reference_recipe();
  r.steps[kRamp].duration_min = 2.0;  // 47.5 C/min
  const auto report = reflow::validate_recipe(r);
  ASSERT_EQ(report.findings.size(), 1u);
  EXPECT_EQ(report.findings[0].severity, Severity::Error);
  EXPECT_EQ(report.findings[0].rule_id, "R2");
  EXPECT_EQ(report.findings[0].step_index, kRamp);
  EXPECT_NE(report.findings[0].message.find("47.5"), std::string::npos);

  r.max_ramp_c_per_min = 50.0;
  EXPECT_TRUE(reflow::validate_recipe(r).passed());
}

TEST(ValidateRecipe, CoolReflowWarns) {
  auto r = reflow::reference_recipe();
  r.steps[kHold].temperature_c = 150.0;
  const auto report = reflow::validate_recipe(r);
  ASSERT_EQ(report.findings.size(), 1u);
  EXPECT_EQ(report.findings[0].severity, Severity::Warning);
  EXPECT_EQ(report.findings[0].rule_id, "R3");
  EXPECT_TRUE(report.error_count() == 0);
}

TEST(ValidateRecipe, DecreasingBakesWarn) {
  auto r = reflow::reference_recipe();
  std::swap(r.steps[2], r.steps[3]);
  const auto report = reflow::validate_recipe(r);
  ASSERT_EQ(report.findings.size(), 1u);
  EXPECT_EQ(report.findings[0].rule_id, "R4");
  EXPECT_EQ(report.findings[0].step_index, 3u);
}

TEST(ValidateRecipe, MissingCleanIsError) {
  auto r = reflow::reference_recipe();
  r.steps.erase(r.steps.begin());
  const auto report = reflow::validate_recipe(r);
  ASSERT_EQ(report.findings.size(), 1u);
  EXPECT_EQ(report.findings[0].rule_id, "R5");
  EXPECT_EQ(report.findings[0].step_index, 0u);
}

TEST(ValidateRecipe, FindingsOrderedAndDeterministic) {
  auto r = reflow::reference_recipe();
  r.steps.erase(r.steps.begin());
  r.steps[3].duration_min = 45.0;  // 260 C bake -> R1 at index 3
  r.steps[4].duration_min = 1.0;   // ramp -> R2 at index 4
  const auto a = reflow::validate_recipe(r);
  const auto b = reflow::validate_recipe(r);
  EXPECT_EQ(a.findings, b.findings);
  EXPECT_EQ(reflow::report_to_json(a).dump(), reflow::report_to_json(b).dump());
  ASSERT_EQ(a.findings.size(), 3u);
  EXPECT_EQ(a.findings[0].rule_id, "R5");
  EXPECT_EQ(a.findings[1].rule_id, "R1");
  EXPECT_EQ(a.findings[2].rule_id, "R2");
}

TEST(CheckStructure, RejectsMalformedSteps) {
  ProcessRecipe empty{"x", {}, std::nullopt};
  EXPECT_THROW(reflow::validate_recipe(empty), reflow::FormatError);

  auto r = reflow::reference_recipe();
  r.steps[2].temperature_c.reset();
  EXPECT_THROW(reflow::validate_recipe(r), reflow::FormatError);

  r = reflow::reference_recipe();
  r.steps[1].spin_segments.clear();
  EXPECT_THROW(reflow::validate_recipe(r), reflow::FormatError);

  r = reflow::reference_recipe();
  r.steps[0].ramp_from_c = 20.0;
  EXPECT_THROW(reflow::validate_recipe(r), reflow::FormatError);

  r = reflow::reference_recipe();
  r.steps[2].duration_min = 0.0;
  EXPECT_THROW(reflow::validate_recipe(r), reflow::FormatError);
}

TEST(RecipeJson, RoundTripIsLossless) {
  const auto ref = reflow::reference_recipe();
  EXPECT_EQ(reflow::parse_recipe(reflow::recipe_to_json(ref).dump()), ref);

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.1, 400.0);
  for (int i = 0; i < 50; ++i) {
    auto r = ref;
    r.max_ramp_c_per_min = u(rng);
    for (auto& s : r.steps) {
      if (s.temperature_c) s.temperature_c = u(rng);
      if (s.duration_min) s.duration_min = u(rng);
      for (auto& seg : s.spin_segments) seg = {u(rng) * 10, u(rng)};
    }
    EXPECT_EQ(reflow::parse_recipe(reflow::recipe_to_json(r).dump()), r);
  }
}

TEST(RecipeJson, RejectsUnknownKeys) {
  try {
    reflow::parse_recipe(R"({"name":"a","steps":[{"kind":"cool","colour":"red"}]})");
    FAIL();
  } catch (const reflow::FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("colour"), std::string::npos);
  }
  try {
    reflow::parse_recipe(R"({"name":"a","steps":[{"kind":"cool"}],"owner":"me"})");
    FAIL();
  } catch (const reflow::FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("owner"), std::string::npos);
  }
  EXPECT_THROW(reflow::parse_recipe(R"({"name":"a","steps":[{"kind":"melt"}]})"),
               reflow::FormatError);
  EXPECT_THROW(reflow::parse_recipe("{not json"), reflow::FormatError);
  EXPECT_THROW(reflow::parse_recipe(R"({"name":"a","steps":[{"kind":"bake","temperature_c":"hot","duration_min":3}]})"),
               reflow::FormatError);
}

TEST(PtfeProperties, Reference) {
  EXPECT_EQ(reflow::kPtfeProperties.melt_point_c, 340.0);
  EXPECT_EQ(reflow::kPtfeProperties.ptfe_content_pct, 60.0);
  EXPECT_EQ(reflow::kPtfeProperties.ph, 9.0);
}

}  // namespace
