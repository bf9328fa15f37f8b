#include "sqwell/wellcore.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sqwell/error.hpp"

namespace sqwell {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::NonPositiveParameter,
                std::string(name) + " must be positive and finite, got " + std::to_string(value));
  }
}

}  // namespace

WellSpec::WellSpec(double depth, double width, double mass, ZeroConvention convention,
                   UnitSystem units)
    : depth_(depth), width_(width), mass_(mass), convention_(convention), units_(units) {
  require_positive(depth, "well depth");
  require_positive(width, "well width");
  require_positive(mass, "mass");
  require_positive(units.hbar2_over_2m, "hbar^2/2m");
}

WellSpec WellSpec::reduced(double P) {
  require_positive(P, "P");
  return WellSpec(P * P, 1.0, 1.0, ZeroConvention::BottomAtZero, units::reduced);
}

DimensionlessStrength DimensionlessStrength::from_P(double P, double energy_scale) {
  require_positive(P, "P");
  require_positive(energy_scale, "energy scale");
  return {P, 1.0 / P, energy_scale};
}

DimensionlessStrength dimensionless_from_well(const WellSpec& well) {
  // P^2 = 2 m U a^2 / (4 hbar^2) = U a^2 / (4 hbar^2/2m)
  const double c = well.hbar2_over_2m();
  const double a = well.width();
  const double P = 0.5 * a * std::sqrt(well.depth() / c);
  return {P, 1.0 / P, 4.0 * c / (a * a)};
}

double k0(const WellSpec& well) {
  return 2.0 * dimensionless_from_well(well).P / well.width();
}

LevelEnergy energy_from_root(double x_root, int n, const DimensionlessStrength& dimless,
                             const WellSpec& well) {
  if (!(x_root > 0.0)) {
    throw Error(ErrorCode::InvalidRoot, "root must be positive, got " + std::to_string(x_root));
  }
  if (x_root >= dimless.P) {
    throw Error(ErrorCode::UnboundRoot, "root " + std::to_string(x_root) +
                                            " is not below P = " + std::to_string(dimless.P));
  }
  const double a = well.width();
  LevelEnergy level{};
  level.n = n;
  level.x_root = x_root;
  level.E_bottom = dimless.energy_scale * x_root * x_root;
  level.E_top = level.E_bottom - well.depth();
  level.k = 2.0 * x_root / a;
  // k0^2 - k^2 = (2/a)^2 (P^2 - x^2); factor the difference to keep precision near the top.
  level.kappa = (2.0 / a) * std::sqrt((dimless.P - x_root) * (dimless.P + x_root));
  return level;
}

std::vector<double> infinite_well_levels(const WellSpec& well, int n_max) {
  if (n_max < 1) {
    throw Error(ErrorCode::UnsupportedIndex, "n_max must be >= 1");
  }
  const double a = well.width();
  const double base = std::numbers::pi * std::numbers::pi * well.hbar2_over_2m() / (a * a);
  std::vector<double> levels;
  levels.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    levels.push_back(base * n * n);
  }
  return levels;
}

std::vector<double> semi_infinite_levels(const WellSpec& well, int n_max) {
  if (n_max < 1) {
    throw Error(ErrorCode::UnsupportedIndex, "n_max must be >= 1");
  }
  const double scale = dimensionless_from_well(well).energy_scale;
  std::vector<double> levels;
  levels.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const double x0 = (2 * n - 1) * std::numbers::pi / 2.0;
    levels.push_back(scale * x0 * x0);
  }
  return levels;
}

}  // namespace sqwell
