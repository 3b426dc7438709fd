#pragma once

// Mass conservation across reflow: the resist column volume equals the lens
// volume, pi d^2 t / 4 = f(theta) (pi / 6) D^3. Every direction is closed form.

#include <span>
#include <vector>

#include "reflow_lens/geometry.hpp"

namespace reflow {

/// Photoresist column before reflow.
struct ResistPattern {
  double pattern_diameter;  // d_b
  double thickness;         // t_b

  /// Throws DomainError unless both are positive.
  void validate() const;
};

struct DesignRow {
  ResistPattern pattern;
  LensGeometry predicted;
};

double forward_lens_diameter(const ResistPattern& pattern, ContactAngle theta,
                             VolumeConvention convention = kDefaultConvention);

/// Resist thickness that reflows a pattern of the given diameter into a lens of diameter target_d.
double required_thickness(double target_d, double pattern_diameter, ContactAngle theta,
                          VolumeConvention convention = kDefaultConvention);

/// Pattern diameter that reflows a film of the given thickness into a lens of diameter target_d.
double required_pattern_diameter(double target_d, double thickness, ContactAngle theta,
                                 VolumeConvention convention = kDefaultConvention);

/// One predicted lens per pattern diameter, in input order. An invalid entry
/// throws DomainError naming its index.
std::vector<DesignRow> design_table(std::span<const double> pattern_diameters, double thickness,
                                    ContactAngle theta,
                                    VolumeConvention convention = kDefaultConvention);

}  // namespace reflow
