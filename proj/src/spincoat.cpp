#include "reflow_lens/spincoat.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "reflow_lens/conservation.hpp"
#include "reflow_lens/errors.hpp"

namespace reflow {

namespace {

constexpr double kFlatSlope = 1e-12;

void validate_model(const SpinModel& model) {
  if (!(model.coefficient > 0.0) || !(model.exponent < 0.0)) {
    throw DomainError("spin model requires a > 0 and b < 0");
  }
}

}  // namespace

SpinModel fit_spin_model(std::span<const CalibrationPoint> points) {
  if (points.size() < 2) {
    throw InsufficientData("spin calibration needs at least 2 points, got " +
                           std::to_string(points.size()));
  }
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::ArrayXd log_w(n);
  Eigen::ArrayXd log_t(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& p = points[static_cast<std::size_t>(i)];
    if (!(p.spin_rpm > 0.0) || !(p.thickness_um > 0.0)) {
      throw DomainError("calibration point #" + std::to_string(i) +
                        " needs positive speed and thickness");
    }
    log_w(i) = std::log(p.spin_rpm);
    log_t(i) = std::log(p.thickness_um);
  }

  const Eigen::ArrayXd dw = log_w - log_w.mean();
  const Eigen::ArrayXd dt = log_t - log_t.mean();
  const double spread = dw.square().sum();
  if (!(spread > 0.0)) {
    throw InsufficientData("spin calibration needs at least 2 distinct speeds");
  }

  const double exponent = (dw * dt).sum() / spread;
  // Flat data can leave a rounding-level slope of either sign.
  if (!(exponent < -kFlatSlope)) {
    throw NonPhysicalFit("fitted exponent b = " + std::to_string(exponent) +
                         " is not negative; thickness must fall with spin speed");
  }
  const double intercept = log_t.mean() - exponent * log_w.mean();
  const Eigen::ArrayXd residual = log_t - (intercept + exponent * log_w);
  return SpinModel{
      .coefficient = std::exp(intercept),
      .exponent = exponent,
      .rms_log_residual = std::sqrt(residual.square().mean()),
  };
}

double thickness_at(const SpinModel& model, double spin_rpm) {
  validate_model(model);
  if (!(spin_rpm > 0.0)) {
    throw DomainError("spin speed must be positive, got " + std::to_string(spin_rpm));
  }
  return model.coefficient * std::pow(spin_rpm, model.exponent);
}

double speed_for_thickness(const SpinModel& model, double thickness_um) {
  validate_model(model);
  if (!(thickness_um > 0.0)) {
    throw DomainError("target thickness must be positive, got " + std::to_string(thickness_um));
  }
  return std::pow(thickness_um / model.coefficient, 1.0 / model.exponent);
}

std::vector<SweepRow> sweep_lens_vs_speed(const SpinModel& model,
                                          std::span<const double> pattern_diameters,
                                          ContactAngle theta, VolumeConvention convention,
                                          const SpeedRange& range) {
  validate_model(model);
  if (!(range.min_rpm > 0.0) || !(range.min_rpm <= range.max_rpm)) {
    throw DomainError("speed range needs 0 < min <= max");
  }
  if (range.steps < 2) throw DomainError("speed sweep needs at least 2 steps");
  if (pattern_diameters.empty()) throw DomainError("speed sweep needs at least one pattern");

  std::vector<SweepRow> rows;
  rows.reserve(pattern_diameters.size() * static_cast<std::size_t>(range.steps));
  const double width = range.max_rpm - range.min_rpm;
  for (double d : pattern_diameters) {
    for (int i = 0; i < range.steps; ++i) {
      const double omega =
          i + 1 == range.steps ? range.max_rpm : range.min_rpm + width * i / (range.steps - 1);
      const double t = thickness_at(model, omega);
      const double lens_d = forward_lens_diameter({d, t}, theta, convention);
      rows.push_back({omega, d, t, lens_d, sag_height(lens_d, theta)});
    }
  }
  return rows;
}

}  // namespace reflow
