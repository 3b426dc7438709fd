#include "reflow_lens/metrology.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "reflow_lens/errors.hpp"

namespace reflow {

namespace {

constexpr double kNmPerUm = 1000.0;
constexpr std::size_t kMinFitSamples = 5;
// Relative rank cut-off for the normalised circle-fit design matrix.
constexpr double kRankThreshold = 1e-10;

struct Coordinates {
  Eigen::VectorXd x;
  Eigen::VectorXd z;
};

Coordinates to_coordinates(const SurfaceProfile& profile) {
  const auto n = static_cast<Eigen::Index>(profile.size());
  Coordinates c{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    c.x(i) = profile.samples()[static_cast<std::size_t>(i)].x_um;
    c.z(i) = profile.samples()[static_cast<std::size_t>(i)].z_um;
  }
  return c;
}

}  // namespace

SurfaceProfile::SurfaceProfile(std::vector<ProfileSample> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 3) {
    throw InsufficientData("a surface profile needs at least 3 samples, got " +
                           std::to_string(samples_.size()));
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i].x_um) || !std::isfinite(samples_[i].z_um)) {
      throw DomainError("profile sample #" + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(samples_[i].x_um > samples_[i - 1].x_um)) {
      throw DomainError("profile x must be strictly increasing (sample #" + std::to_string(i) +
                        ")");
    }
  }
}

void MeasuredLens::validate() const {
  if (!(diameter > 0.0) || !(height > 0.0) || !(height < diameter)) {
    throw DomainError("measured lens needs 0 < height < diameter");
  }
}

double roughness_ra(const SurfaceProfile& profile) {
  const auto [x, z] = to_coordinates(profile);
  const auto n = x.size();

  // Centre x before fitting the mean line so the normal equations stay well conditioned.
  const Eigen::VectorXd xc = x.array() - x.mean();
  Eigen::MatrixXd design(n, 2);
  design.col(0).setOnes();
  design.col(1) = xc;
  const Eigen::Vector2d line = design.colPivHouseholderQr().solve(z);
  const Eigen::VectorXd residual = z - design * line;
  return residual.cwiseAbs().mean() * kNmPerUm;
}

LensGeometry fit_sphere_profile(const SurfaceProfile& profile, double base_plane_z) {
  if (profile.size() < kMinFitSamples) {
    throw InsufficientData("sphere fit needs at least 5 samples, got " +
                           std::to_string(profile.size()));
  }
  if (!std::isfinite(base_plane_z)) throw DomainError("base plane must be finite");

  const auto [x, z] = to_coordinates(profile);
  const auto n = x.size();

  // Shift to the centroid and scale to unit RMS radius; the fit is then
  // (u^2 + v^2) + D u + E v + F = 0 in normalised coordinates.
  const double x0 = x.mean();
  const double z0 = z.mean();
  const Eigen::ArrayXd xs = x.array() - x0;
  const Eigen::ArrayXd zs = z.array() - z0;
  const double scale = std::sqrt((xs.square() + zs.square()).mean());
  if (!(scale > 0.0)) throw DegenerateFit("profile samples coincide");
  const Eigen::ArrayXd u = xs / scale;
  const Eigen::ArrayXd v = zs / scale;

  Eigen::MatrixXd design(n, 3);
  design.col(0) = u.matrix();
  design.col(1) = v.matrix();
  design.col(2).setOnes();
  const Eigen::VectorXd rhs = -(u.square() + v.square()).matrix();

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(kRankThreshold);
  if (qr.rank() < 3) throw DegenerateFit("profile samples are collinear; no circle fits");
  const Eigen::Vector3d coeff = qr.solve(rhs);

  const double cu = -0.5 * coeff(0);
  const double cv = -0.5 * coeff(1);
  const double r2 = cu * cu + cv * cv - coeff(2);
  if (!(r2 > 0.0)) throw DegenerateFit("circle fit returned a non-positive radius");

  const double radius = std::sqrt(r2) * scale;
  const double center_z = z0 + cv * scale;
  const double height = (center_z - base_plane_z) + radius;
  if (!(height > 0.0 && height < 2.0 * radius)) {
    throw ProfileInconsistent("fitted cap height " + std::to_string(height) +
                              " um lies outside (0, 2R) for R = " + std::to_string(radius) +
                              " um; check the base plane");
  }

  return make_lens_from_sag(2.0 * radius, height, VolumeConvention::SessileDrop);
}

ComparisonRow compare_to_theory(const MeasuredLens& measured, const LensGeometry& theoretical) {
  measured.validate();
  const auto pct = [](double theory, double experiment) {
    return 100.0 * std::abs(theory - experiment) / theory;
  };
  return ComparisonRow{
      .experimental = measured,
      .theoretical = theoretical,
      .diameter_error_pct = pct(theoretical.sphere_diameter, measured.diameter),
      .height_error_pct = pct(theoretical.sag_height, measured.height),
  };
}

double round_pct(double pct) { return std::round(pct * 10.0) / 10.0; }

}  // namespace reflow
