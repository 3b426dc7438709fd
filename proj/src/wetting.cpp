#include "reflow_lens/wetting.hpp"

#include <cmath>
#include <string>

#include "reflow_lens/errors.hpp"

namespace reflow {

namespace {

void validate(const SurfaceEnergies& e) {
  if (!std::isfinite(e.solid_air) || !std::isfinite(e.liquid_solid)) {
    throw DomainError("surface energies must be finite");
  }
  if (!(e.air_liquid > 0.0) || !std::isfinite(e.air_liquid)) {
    throw DomainError("liquid surface tension S_al must be positive, got " +
                      std::to_string(e.air_liquid));
  }
}

// Both routines compare the same ratio, so they agree on every boundary and a
// common positive scale factor cancels out of the comparison.
double cosine_argument(const SurfaceEnergies& e) {
  return (e.solid_air - e.liquid_solid) / e.air_liquid;
}

}  // namespace

std::string_view to_string(WettingRegime regime) {
  switch (regime) {
    case WettingRegime::Spreading:
      return "spreading";
    case WettingRegime::PartialWetting:
      return "partial-wetting";
    case WettingRegime::Beading:
      return "beading";
  }
  return "unknown";
}

std::string_view to_string(AngleClass label) {
  switch (label) {
    case AngleClass::Hydrophilic:
      return "hydrophilic";
    case AngleClass::Hydrophobic:
      return "hydrophobic";
    case AngleClass::SuperHydrophobic:
      return "super-hydrophobic";
  }
  return "unknown";
}

ContactAngle young_contact_angle(const SurfaceEnergies& energies) {
  validate(energies);
  const double cosine = cosine_argument(energies);
  if (!(std::abs(cosine) < 1.0)) {
    throw NoEquilibriumAngle("no equilibrium contact angle: (S_sa - S_ls) / S_al = " +
                             std::to_string(cosine) + " lies outside (-1, 1)");
  }
  return ContactAngle::from_degrees(std::acos(cosine) * 180.0 / kPi);
}

WettingRegime classify_wetting(const SurfaceEnergies& energies) {
  validate(energies);
  const double cosine = cosine_argument(energies);
  if (cosine > 1.0) return WettingRegime::Spreading;
  if (cosine < -1.0) return WettingRegime::Beading;
  return WettingRegime::PartialWetting;
}

AngleClass classify_angle(ContactAngle theta) {
  if (theta.degrees() < 90.0) return AngleClass::Hydrophilic;
  if (theta.degrees() < kSuperHydrophobicDeg) return AngleClass::Hydrophobic;
  return AngleClass::SuperHydrophobic;
}

}  // namespace reflow
