#include "reflow_lens/geometry.hpp"

#include <algorithm>
#include <cctype>
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

// (2 + cos t)(1 - cos t)^2 / 4, the sessile cap as a fraction of the sphere.
double sessile_fraction(double cos_theta) {
  const double one_minus = 1.0 - cos_theta;
  return 0.25 * (2.0 + cos_theta) * one_minus * one_minus;
}

}  // namespace

ContactAngle ContactAngle::from_degrees(double degrees) {
  if (!(degrees > 0.0 && degrees < 180.0)) {
    throw DomainError("contact angle must lie in (0, 180) degrees, got " +
                      std::to_string(degrees));
  }
  return ContactAngle(degrees);
}

// Above 45 degrees the complement 90 - theta is exact, so reduce through it.
double ContactAngle::cosine() const {
  if (degrees_ <= 45.0) return std::cos(radians());
  return std::sin((90.0 - degrees_) * kPi / 180.0);
}

double ContactAngle::sine() const {
  if (degrees_ <= 45.0) return std::sin(radians());
  return std::cos((90.0 - degrees_) * kPi / 180.0);
}

std::string_view to_string(VolumeConvention convention) {
  switch (convention) {
    case VolumeConvention::PaperEq2:
      return "paper-eq2";
    case VolumeConvention::SessileDrop:
      return "sessile-drop";
  }
  return "unknown";
}

VolumeConvention parse_convention(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c == '_') c = '-';
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (key == "paper-eq2" || key == "papereq2") return VolumeConvention::PaperEq2;
  if (key == "sessile-drop" || key == "sessiledrop") return VolumeConvention::SessileDrop;
  throw DomainError("unknown volume convention '" + std::string(text) +
                    "' (expected paper-eq2 or sessile-drop)");
}

double cap_fill_fraction(ContactAngle theta, VolumeConvention convention) {
  const double sessile = sessile_fraction(theta.cosine());
  return convention == VolumeConvention::SessileDrop ? sessile : 1.0 - sessile;
}

double sag_height(double sphere_diameter, ContactAngle theta) {
  require_positive(sphere_diameter, "sphere diameter");
  return 0.5 * sphere_diameter * (1.0 - theta.cosine());
}

ContactAngle contact_angle_from_profile(double radius, double sag) {
  require_positive(radius, "radius");
  if (!(sag > 0.0 && sag < 2.0 * radius)) {
    throw DomainError("sag height must lie in (0, 2R): h = " + std::to_string(sag) +
                      ", R = " + std::to_string(radius));
  }
  // sqrt(8Rh - 4h^2) = 2 sqrt(h (2R - h)); the factored form keeps precision
  // near both ends of the interval.
  const double root = std::sqrt(sag * (2.0 * radius - sag));
  const double degrees = 90.0 + std::atan2(sag - radius, root) * 180.0 / kPi;
  return ContactAngle::from_degrees(degrees);
}

double contact_radius(double radius, ContactAngle theta) {
  require_positive(radius, "radius");
  return radius * theta.sine();
}

double lens_volume(double sphere_diameter, ContactAngle theta, VolumeConvention convention) {
  require_positive(sphere_diameter, "sphere diameter");
  const double d3 = sphere_diameter * sphere_diameter * sphere_diameter;
  return cap_fill_fraction(theta, convention) * kPi / 6.0 * d3;
}

double column_volume(double pattern_diameter, double thickness) {
  require_positive(pattern_diameter, "pattern diameter");
  require_positive(thickness, "resist thickness");
  return kPi * pattern_diameter * pattern_diameter * thickness / 4.0;
}

double oracle_volume(double sphere_diameter, ContactAngle theta, int panels) {
  require_positive(sphere_diameter, "sphere diameter");
  if (panels < 2) throw DomainError("oracle_volume needs at least 2 panels");
  if (panels % 2 != 0) ++panels;

  const double radius = 0.5 * sphere_diameter;
  const double height = radius * (1.0 - theta.cosine());
  const double center = height - radius;
  // Disc area of the slice at height z above the substrate.
  auto slice = [&](double z) {
    const double dz = z - center;
    return kPi * (radius * radius - dz * dz);
  };

  const double step = height / panels;
  double odd = 0.0;
  double even = 0.0;
  for (int i = 1; i < panels; ++i) {
    (i % 2 == 1 ? odd : even) += slice(i * step);
  }
  return step / 3.0 * (slice(0.0) + 4.0 * odd + 2.0 * even + slice(height));
}

LensGeometry make_lens(double sphere_diameter, ContactAngle theta, VolumeConvention convention) {
  require_positive(sphere_diameter, "sphere diameter");
  const double radius = 0.5 * sphere_diameter;
  return LensGeometry{
      .sphere_diameter = sphere_diameter,
      .sag_height = sag_height(sphere_diameter, theta),
      .contact_angle = theta,
      .contact_radius = contact_radius(radius, theta),
      .volume = lens_volume(sphere_diameter, theta, convention),
      .convention = convention,
  };
}

LensGeometry make_lens_from_sag(double sphere_diameter, double sag, VolumeConvention convention) {
  require_positive(sphere_diameter, "sphere diameter");
  const ContactAngle theta = contact_angle_from_profile(0.5 * sphere_diameter, sag);
  LensGeometry lens = make_lens(sphere_diameter, theta, convention);
  lens.sag_height = sag;
  return lens;
}

}  // namespace reflow
