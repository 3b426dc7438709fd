#pragma once

#include <string_view>

#include "reflow_lens/geometry.hpp"

namespace reflow {

/// Interfacial energies in mJ/m^2.
struct SurfaceEnergies {
  double solid_air;     // S_sa
  double liquid_solid;  // S_ls
  double air_liquid;    // S_al, the liquid surface tension; must be > 0
};

enum class WettingRegime { Spreading, PartialWetting, Beading };

enum class AngleClass { Hydrophilic, Hydrophobic, SuperHydrophobic };

inline constexpr double kSuperHydrophobicDeg = 150.0;

std::string_view to_string(WettingRegime regime);
std::string_view to_string(AngleClass label);

/// Young's equation S_sa = S_ls + S_al cos(theta) solved for theta.
/// Throws NoEquilibriumAngle when |(S_sa - S_ls) / S_al| >= 1.
ContactAngle young_contact_angle(const SurfaceEnergies& energies);

/// Spreading when S_sa > S_ls + S_al, Beading when S_sa < S_ls - S_al.
WettingRegime classify_wetting(const SurfaceEnergies& energies);

AngleClass classify_angle(ContactAngle theta);

}  // namespace reflow
