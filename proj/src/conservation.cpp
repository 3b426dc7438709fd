#include "reflow_lens/conservation.hpp"

#include <cmath>
#include <string>

#include "reflow_lens/errors.hpp"

namespace reflow {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive and finite, got " +
                      std::to_string(value));
  }
}

}  // namespace

void ResistPattern::validate() const {
  require_positive(pattern_diameter, "pattern diameter");
  require_positive(thickness, "resist thickness");
}

double forward_lens_diameter(const ResistPattern& pattern, ContactAngle theta,
                             VolumeConvention convention) {
  pattern.validate();
  const double fill = cap_fill_fraction(theta, convention);
  const double d = pattern.pattern_diameter;
  return std::cbrt(3.0 * d * d * pattern.thickness / (2.0 * fill));
}

double required_thickness(double target_d, double pattern_diameter, ContactAngle theta,
                          VolumeConvention convention) {
  require_positive(target_d, "target lens diameter");
  require_positive(pattern_diameter, "pattern diameter");
  const double fill = cap_fill_fraction(theta, convention);
  return 2.0 * fill * target_d * target_d * target_d /
         (3.0 * pattern_diameter * pattern_diameter);
}

double required_pattern_diameter(double target_d, double thickness, ContactAngle theta,
                                 VolumeConvention convention) {
  require_positive(target_d, "target lens diameter");
  require_positive(thickness, "resist thickness");
  const double fill = cap_fill_fraction(theta, convention);
  return std::sqrt(2.0 * fill * target_d * target_d * target_d / (3.0 * thickness));
}

std::vector<DesignRow> design_table(std::span<const double> pattern_diameters, double thickness,
                                    ContactAngle theta, VolumeConvention convention) {
  if (pattern_diameters.empty()) throw DomainError("design table needs at least one pattern");
  require_positive(thickness, "resist thickness");

  std::vector<DesignRow> rows;
  rows.reserve(pattern_diameters.size());
  for (std::size_t i = 0; i < pattern_diameters.size(); ++i) {
    const ResistPattern pattern{pattern_diameters[i], thickness};
    try {
      pattern.validate();
    } catch (const DomainError& e) {
      throw DomainError("pattern #" + std::to_string(i) + ": " + e.what());
    }
    const double diameter = forward_lens_diameter(pattern, theta, convention);
    rows.push_back({pattern, make_lens(diameter, theta, convention)});
  }
  return rows;
}

}  // namespace reflow
