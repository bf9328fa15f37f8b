#pragma once

#include <vector>

#include "sqwell/units.hpp"

namespace sqwell {

enum class ZeroConvention {
  TopAtZero,     // V(x) = -U inside, 0 outside; bound energies in (-U, 0)
  BottomAtZero,  // V(x) + U; bound energies in (0, U)
};

/// Physical square well of depth U and width a for a particle of mass m.
/// Quantities are in the units of `units`; all three must be positive.
class WellSpec {
 public:
  WellSpec(double depth, double width, double mass,
           ZeroConvention convention = ZeroConvention::BottomAtZero,
           UnitSystem units = units::electron_nm_ev);

  double depth() const noexcept { return depth_; }
  double width() const noexcept { return width_; }
  double mass() const noexcept { return mass_; }
  ZeroConvention convention() const noexcept { return convention_; }
  const UnitSystem& units() const noexcept { return units_; }

  /// hbar^2 / (2 m) for this particle.
  double hbar2_over_2m() const noexcept { return units_.hbar2_over_2m / mass_; }

  /// Well of strength P in reduced units: a = 1, depth P^2, energy scale 1.
  static WellSpec reduced(double P);

 private:
  double depth_;
  double width_;
  double mass_;
  ZeroConvention convention_;
  UnitSystem units_;
};

/// P = sqrt(2 m U) a / (2 hbar), p = 1/P, energy_scale = U / P^2 = 2 hbar^2/(m a^2).
struct DimensionlessStrength {
  double P;
  double p;
  double energy_scale;

  /// Dimensionless-only construction; energy_scale defaults to 1 so that
  /// energies come out in units of 2 hbar^2/(m a^2).
  static DimensionlessStrength from_P(double P, double energy_scale = 1.0);
};

struct LevelEnergy {
  int n;            // global level index: odd -> even parity, even -> odd parity
  double x_root;    // k_n a / 2
  double E_top;     // TopAtZero convention
  double E_bottom;  // BottomAtZero convention
  double k;         // inside wave vector
  double kappa;     // sqrt(k0^2 - k^2)

  double energy(ZeroConvention convention) const noexcept {
    return convention == ZeroConvention::TopAtZero ? E_top : E_bottom;
  }
};

DimensionlessStrength dimensionless_from_well(const WellSpec& well);

/// Outside wave vector scale k0 = 2P/a. Not a level: n = 0 has no meaning.
double k0(const WellSpec& well);

LevelEnergy energy_from_root(double x_root, int n, const DimensionlessStrength& dimless,
                             const WellSpec& well);

/// E_n = pi^2 hbar^2 n^2 / (2 m a^2), n = 1..n_max.
std::vector<double> infinite_well_levels(const WellSpec& well, int n_max);

/// E_n = 2 hbar^2 pi^2 (n - 1/2)^2 / (m a^2), n = 1..n_max.
std::vector<double> semi_infinite_levels(const WellSpec& well, int n_max);

}  // namespace sqwell
