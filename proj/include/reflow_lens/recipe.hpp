#pragma once

// Fabrication recipe model and rule checks for the PTFE-coat / reflow flow.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace reflow {

enum class StepKind { Clean, SpinCoat, Bake, Expose, Develop, Reflow, Cool };

std::string_view to_string(StepKind kind);
/// Accepts the snake_case names produced by to_string; throws FormatError otherwise.
StepKind parse_step_kind(std::string_view text);

struct SpinSegment {
  double rpm;
  double seconds;
  friend bool operator==(const SpinSegment&, const SpinSegment&) = default;
};

struct ProcessStep {
  StepKind kind;
  std::optional<double> temperature_c;
  std::optional<double> duration_min;
  std::vector<SpinSegment> spin_segments;
  /// Start temperature of a heating ramp that ends at temperature_c.
  std::optional<double> ramp_from_c;

  friend bool operator==(const ProcessStep&, const ProcessStep&) = default;
};

inline constexpr double kDefaultMaxRampCPerMin = 9.5;

struct ProcessRecipe {
  std::string name;
  std::vector<ProcessStep> steps;
  std::optional<double> max_ramp_c_per_min;

  double ramp_limit() const { return max_ramp_c_per_min.value_or(kDefaultMaxRampCPerMin); }

  friend bool operator==(const ProcessRecipe&, const ProcessRecipe&) = default;
};

/// Throws FormatError when a step lacks the fields its kind needs.
void check_structure(const ProcessRecipe& recipe);

enum class Severity { Error, Warning };

std::string_view to_string(Severity severity);

struct Finding {
  Severity severity;
  std::string rule_id;
  std::size_t step_index;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool passed() const { return findings.empty(); }
  std::size_t error_count() const;
  std::size_t warning_count() const;
};

// Rule thresholds.
inline constexpr double kPeelOffBakeTempC = 165.0;
inline constexpr double kPeelOffBakeMin = 30.0;
inline constexpr double kGlassTransitionC = 160.0;

/// Clean, PTFE spin-coat, three PTFE bakes, reflow ramp and hold, cool.
ProcessRecipe reference_recipe();

/// Rules, findings ordered by step index then rule id:
///  R1 bake at >= 165 C lasting >= 30 min: Error (PTFE peel-off)
///  R2 reflow heating ramp faster than the recipe limit: Error (cracking)
///  R3 reflow peak below the 160 C glass transition: Warning
///  R4 bake temperatures decreasing along the recipe: Warning
///  R5 spin coat with no earlier clean: Error
/// Calls check_structure first.
ValidationReport validate_recipe(const ProcessRecipe& recipe);

/// Liquid PTFE dispersion data (ALGOFLOND 60/A). Informational only.
struct PtfeProperties {
  double melt_point_c = 340.0;
  double melt_point_f = 644.0;
  double ptfe_content_pct = 60.0;
  double surfactant_on_mixture_pct = 3.0;
  double surfactant_on_solid_pct = 6.0;
  double ph = 9.0;
  double specific_gravity_20c = 1.52;
  double conductivity_us_per_cm = 700.0;
  double avg_particle_size_um = 0.24;
  double brookfield_viscosity_35c_mpas = 20.0;
};

inline constexpr PtfeProperties kPtfeProperties{};

}  // namespace reflow
