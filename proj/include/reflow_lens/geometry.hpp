#pragma once

// Spherical-cap geometry of a reflowed ball lens.
//
// Lengths are micrometres, volumes cubic micrometres, angles degrees at the
// API boundary. A lens is a sphere of diameter D truncated by the substrate
// plane; the contact angle is measured through the liquid, so a lens with
// theta > 90 deg is more than half a sphere.

#include <string_view>

namespace reflow {

inline constexpr double kPi = 3.14159265358979323846;

/// Contact angle in degrees, restricted to the open interval (0, 180).
class ContactAngle {
 public:
  /// Throws DomainError unless 0 < degrees < 180.
  static ContactAngle from_degrees(double degrees);

  double degrees() const { return degrees_; }
  double radians() const { return degrees_ * kPi / 180.0; }
  /// cos(theta), exactly zero at 90 degrees.
  double cosine() const;
  double sine() const;

  friend bool operator==(ContactAngle, ContactAngle) = default;

 private:
  explicit ContactAngle(double degrees) : degrees_(degrees) {}
  double degrees_;
};

/// Which fraction of the sphere the printed volume formula assigns to the lens.
///
/// SessileDrop is the cap of height R(1 - cos theta). PaperEq2 is its
/// complement, 1 - SessileDrop, which equals SessileDrop(180 - theta).
enum class VolumeConvention { PaperEq2, SessileDrop };

inline constexpr VolumeConvention kDefaultConvention = VolumeConvention::PaperEq2;
inline constexpr double kDefaultAngleDeg = 116.0;

std::string_view to_string(VolumeConvention convention);
/// Accepts "paper-eq2" / "sessile-drop" (case-insensitive, '_' or '-').
VolumeConvention parse_convention(std::string_view text);

struct LensGeometry {
  double sphere_diameter;  // D_b
  double sag_height;       // h
  ContactAngle contact_angle;
  double contact_radius;  // a
  double volume;
  VolumeConvention convention;
};

/// Fraction of the full sphere volume attributed to the lens.
double cap_fill_fraction(ContactAngle theta, VolumeConvention convention);

double sag_height(double sphere_diameter, ContactAngle theta);

/// Inverts sag_height: theta = 90 + atan((2h - 2R) / sqrt(8Rh - 4h^2)).
/// Requires 0 < h < 2R.
ContactAngle contact_angle_from_profile(double radius, double sag);

double contact_radius(double radius, ContactAngle theta);

double lens_volume(double sphere_diameter, ContactAngle theta, VolumeConvention convention);

/// Volume of the cylindrical resist column before reflow.
double column_volume(double pattern_diameter, double thickness);

/// Composite-Simpson integration of the sessile cap as a solid of
/// revolution. Independent of the closed form used by lens_volume.
double oracle_volume(double sphere_diameter, ContactAngle theta, int panels = 100000);

/// Builds a complete lens description from its sphere diameter and angle.
LensGeometry make_lens(double sphere_diameter, ContactAngle theta,
                       VolumeConvention convention = kDefaultConvention);

/// Builds a lens from measured or tabulated diameter and sag; the angle is
/// recovered with contact_angle_from_profile and the sag is kept verbatim.
LensGeometry make_lens_from_sag(double sphere_diameter, double sag,
                                VolumeConvention convention = kDefaultConvention);

}  // namespace reflow
