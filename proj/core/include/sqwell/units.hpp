#pragma once

#include <string_view>

namespace sqwell {

/// A unit system is fully described by hbar^2 / (2 * mass_unit), expressed in
/// energy_unit * length_unit^2. Every conversion in wellcore goes through it.
struct UnitSystem {
  std::string_view name;
  double hbar2_over_2m;
};

namespace constants {

// CODATA 2018 exact / recommended values.
inline constexpr double hbar_si = 1.054571817e-34;          // J s
inline constexpr double electron_mass_si = 9.1093837015e-31;  // kg
inline constexpr double electron_volt_si = 1.602176634e-19;   // J

// hbar^2 / (2 m_e) in eV nm^2. CODATA 2018 gives 0.0380998212...; the
// desk-scale preset pins the six-digit value.
inline constexpr double hbar2_over_2me_ev_nm2 = 0.0380998;

}  // namespace constants

namespace units {

/// kg, m, J.
inline constexpr UnitSystem si{"si", constants::hbar_si * constants::hbar_si / 2.0};

/// Mass in electron masses, length in nm, energy in eV.
inline constexpr UnitSystem electron_nm_ev{"electron-nm-eV", constants::hbar2_over_2me_ev_nm2};

/// hbar^2 / (2m) = 1/4, so with width a = 1 the energy scale 2 hbar^2/(m a^2)
/// is 1 and the depth equals P^2.
inline constexpr UnitSystem reduced{"reduced", 0.25};

}  // namespace units

}  // namespace sqwell
