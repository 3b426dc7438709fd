#include "reflow_lens/recipe.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "reflow_lens/errors.hpp"

namespace reflow {

namespace {

constexpr std::pair<StepKind, std::string_view> kKindNames[] = {
    {StepKind::Clean, "clean"},   {StepKind::SpinCoat, "spin_coat"}, {StepKind::Bake, "bake"},
    {StepKind::Expose, "expose"}, {StepKind::Develop, "develop"},    {StepKind::Reflow, "reflow"},
    {StepKind::Cool, "cool"},
};

bool is_thermal(StepKind kind) { return kind == StepKind::Bake || kind == StepKind::Reflow; }

std::string fmt(double value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

[[noreturn]] void bad_step(std::size_t index, StepKind kind, const std::string& what) {
  throw FormatError("step #" + std::to_string(index) + " (" + std::string(to_string(kind)) +
                    "): " + what);
}

void check_finite(std::size_t index, StepKind kind, const std::optional<double>& v,
                  const char* name) {
  if (v && !std::isfinite(*v)) bad_step(index, kind, std::string(name) + " must be finite");
}

}  // namespace

std::string_view to_string(StepKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

StepKind parse_step_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  throw FormatError("unknown step kind '" + std::string(text) + "'");
}

std::string_view to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(findings.begin(), findings.end(), [](const auto& f) {
    return f.severity == Severity::Error;
  }));
}

std::size_t ValidationReport::warning_count() const { return findings.size() - error_count(); }

void check_structure(const ProcessRecipe& recipe) {
  if (recipe.steps.empty()) throw FormatError("recipe '" + recipe.name + "' has no steps");
  if (recipe.max_ramp_c_per_min && !(*recipe.max_ramp_c_per_min > 0.0)) {
    throw FormatError("max_ramp_c_per_min must be positive");
  }
  for (std::size_t i = 0; i < recipe.steps.size(); ++i) {
    const ProcessStep& s = recipe.steps[i];
    check_finite(i, s.kind, s.temperature_c, "temperature_c");
    check_finite(i, s.kind, s.duration_min, "duration_min");
    check_finite(i, s.kind, s.ramp_from_c, "ramp_from_c");
    if (s.duration_min && !(*s.duration_min > 0.0)) {
      bad_step(i, s.kind, "duration_min must be positive");
    }
    if (is_thermal(s.kind) && (!s.temperature_c || !s.duration_min)) {
      bad_step(i, s.kind, "temperature_c and duration_min are required");
    }
    if (s.ramp_from_c && !is_thermal(s.kind)) {
      bad_step(i, s.kind, "ramp_from_c only applies to bake and reflow steps");
    }
    if (s.kind == StepKind::SpinCoat) {
      if (s.spin_segments.empty()) bad_step(i, s.kind, "spin_segments are required");
      for (const auto& seg : s.spin_segments) {
        if (!(seg.rpm > 0.0) || !(seg.seconds > 0.0) || !std::isfinite(seg.rpm) ||
            !std::isfinite(seg.seconds)) {
          bad_step(i, s.kind, "spin segments need positive rpm and seconds");
        }
      }
    } else if (!s.spin_segments.empty()) {
      bad_step(i, s.kind, "spin_segments only apply to spin_coat steps");
    }
  }
}

ProcessRecipe reference_recipe() {
  const auto thermal = [](StepKind kind, double temp, double minutes,
                          std::optional<double> ramp_from = std::nullopt) {
    return ProcessStep{kind, temp, minutes, {}, ramp_from};
  };
  return ProcessRecipe{
      .name = "ptfe-microball-reference",
      .steps =
          {
              // Piranha 3:1, DI rinse 5 min, N2 dry, then bake at 120 C.
              ProcessStep{StepKind::Clean, 120.0, std::nullopt, {}, std::nullopt},
              // Spread then spin of the liquid PTFE.
              ProcessStep{StepKind::SpinCoat, std::nullopt, std::nullopt,
                          {{1000.0, 10.0}, {2000.0, 40.0}}, std::nullopt},
              thermal(StepKind::Bake, 110.0, 10.0),
              thermal(StepKind::Bake, 165.0, 10.0),
              thermal(StepKind::Bake, 260.0, 15.0),
              // 25 -> 120 C over 10 min, then the glass-transition hold.
              thermal(StepKind::Reflow, 120.0, 10.0, 25.0),
              thermal(StepKind::Reflow, 160.0, 15.0),
              ProcessStep{StepKind::Cool, std::nullopt, std::nullopt, {}, std::nullopt},
          },
      .max_ramp_c_per_min = std::nullopt,
  };
}

ValidationReport validate_recipe(const ProcessRecipe& recipe) {
  check_structure(recipe);
  const auto& steps = recipe.steps;
  ValidationReport report;
  auto add = [&](Severity sev, const char* rule, std::size_t index, std::string message) {
    report.findings.push_back({sev, rule, index, std::move(message)});
  };

  // R1
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    if (s.kind == StepKind::Bake && *s.temperature_c >= kPeelOffBakeTempC &&
        *s.duration_min >= kPeelOffBakeMin) {
      add(Severity::Error, "R1", i,
          "peel-off risk: bake at " + fmt(*s.temperature_c) + " C for " + fmt(*s.duration_min) +
              " min (limit < " + fmt(kPeelOffBakeMin) + " min at >= " + fmt(kPeelOffBakeTempC) +
              " C)");
    }
  }

  // R2
  const double limit = recipe.ramp_limit();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    if (s.kind != StepKind::Reflow || !s.ramp_from_c) continue;
    const double rate = (*s.temperature_c - *s.ramp_from_c) / *s.duration_min;
    if (rate > limit) {
      add(Severity::Error, "R2", i,
          "thermal-crack risk: ramp " + fmt(*s.ramp_from_c) + " -> " + fmt(*s.temperature_c) +
              " C at " + fmt(rate) + " C/min exceeds " + fmt(limit) + " C/min");
    }
  }

  // R3: each run of consecutive reflow steps must peak at the glass transition.
  for (std::size_t i = 0; i < steps.size();) {
    if (steps[i].kind != StepKind::Reflow) {
      ++i;
      continue;
    }
    std::size_t peak = i;
    std::size_t j = i;
    for (; j < steps.size() && steps[j].kind == StepKind::Reflow; ++j) {
      if (*steps[j].temperature_c > *steps[peak].temperature_c) peak = j;
    }
    if (*steps[peak].temperature_c < kGlassTransitionC) {
      add(Severity::Warning, "R3", peak,
          "below glass transition, no reflow: peak " + fmt(*steps[peak].temperature_c) +
              " C < " + fmt(kGlassTransitionC) + " C");
    }
    i = j;
  }

  // R4
  std::optional<double> previous_bake;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    if (s.kind != StepKind::Bake) continue;
    if (previous_bake && *s.temperature_c < *previous_bake) {
      add(Severity::Warning, "R4", i,
          "bake temperature drops from " + fmt(*previous_bake) + " C to " +
              fmt(*s.temperature_c) + " C");
    }
    previous_bake = s.temperature_c;
  }

  // R5
  bool cleaned = false;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].kind == StepKind::Clean) cleaned = true;
    if (steps[i].kind == StepKind::SpinCoat && !cleaned) {
      add(Severity::Error, "R5", i, "spin coat without a preceding clean step");
    }
  }

  std::stable_sort(report.findings.begin(), report.findings.end(),
                   [](const Finding& a, const Finding& b) {
                     if (a.step_index != b.step_index) return a.step_index < b.step_index;
                     return a.rule_id < b.rule_id;
                   });
  return report;
}

}  // namespace reflow
