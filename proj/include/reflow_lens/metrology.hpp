#pragma once

// Stylus-profile analysis and measured-vs-predicted comparison.

#include <vector>

#include "reflow_lens/geometry.hpp"

namespace reflow {

struct ProfileSample {
  double x_um;
  double z_um;
};

/// Ordered stylus trace: at least three samples with strictly increasing x.
class SurfaceProfile {
 public:
  /// Throws InsufficientData below three samples and DomainError on
  /// non-increasing or non-finite coordinates.
  explicit SurfaceProfile(std::vector<ProfileSample> samples);

  const std::vector<ProfileSample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }

 private:
  std::vector<ProfileSample> samples_;
};

struct MeasuredLens {
  double diameter;
  double height;

  /// Throws DomainError unless 0 < height < diameter.
  void validate() const;
};

struct ComparisonRow {
  MeasuredLens experimental;
  LensGeometry theoretical;
  double diameter_error_pct;
  double height_error_pct;
};

/// Arithmetic-average roughness after removing the least-squares line, in nm.
double roughness_ra(const SurfaceProfile& profile);

/// Algebraic (Kasa) circle fit to the trace. The base plane sets the sag
/// height; the returned volume uses the physical cap, VolumeConvention::SessileDrop.
/// Throws InsufficientData below five samples, DegenerateFit on collinear
/// samples and ProfileInconsistent when the cap height leaves (0, 2R).
LensGeometry fit_sphere_profile(const SurfaceProfile& profile, double base_plane_z = 0.0);

/// Percent errors relative to the theoretical values.
ComparisonRow compare_to_theory(const MeasuredLens& measured, const LensGeometry& theoretical);

/// Rounds a percentage to one decimal for display.
double round_pct(double pct);

}  // namespace reflow
