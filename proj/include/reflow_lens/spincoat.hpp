#pragma once

// Spin-coating calibration t = a * omega^b and spin-speed design sweeps.

#include <span>
#include <vector>

#include "reflow_lens/geometry.hpp"

namespace reflow {

struct CalibrationPoint {
  double spin_rpm;
  double thickness_um;
};

struct SpinModel {
  double coefficient;       // a, um * rpm^-b
  double exponent;          // b < 0
  double rms_log_residual;  // RMS of ln(t) residuals of the fit
};

/// Least-squares line through (ln omega, ln t).
/// Throws InsufficientData for fewer than two distinct speeds and
/// NonPhysicalFit when the fitted exponent is not negative.
SpinModel fit_spin_model(std::span<const CalibrationPoint> points);

double thickness_at(const SpinModel& model, double spin_rpm);

double speed_for_thickness(const SpinModel& model, double thickness_um);

struct SpeedRange {
  double min_rpm;
  double max_rpm;
  int steps;
};

struct SweepRow {
  double spin_rpm;
  double pattern_diameter;
  double thickness;
  double lens_diameter;
  double sag_height;
};

/// Rows are grouped by pattern diameter (input order), each group running
/// over a uniform speed grid from min_rpm to max_rpm inclusive.
std::vector<SweepRow> sweep_lens_vs_speed(const SpinModel& model,
                                          std::span<const double> pattern_diameters,
                                          ContactAngle theta, VolumeConvention convention,
                                          const SpeedRange& range);

}  // namespace reflow
