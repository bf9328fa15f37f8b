#include "sqwell/apps.hpp"

#include <cmath>
#include <limits>

#include "sqwell/error.hpp"

namespace sqwell {

WellSpec freestanding_well(const FilmSpec& film) {
  if (film.work_function < 0.0 || !(film.fermi_energy > 0.0)) {
    throw Error(ErrorCode::NonPositiveParameter,
                "need work function >= 0 and Fermi energy > 0");
  }
  return WellSpec(film.work_function + film.fermi_energy, film.thickness, film.effective_mass,
                  ZeroConvention::BottomAtZero, film.units);
}

SpectrumReport spectrum_report(const WellSpec& well, const std::vector<MethodTag>& methods) {
  const DimensionlessStrength dimless = dimensionless_from_well(well);
  SpectrumReport report{well,
                        dimless,
                        count_bound_states(dimless, CountMode::Approximate),
                        count_bound_states(dimless, CountMode::Refined),
                        count_bound_states(dimless, CountMode::Matched),
                        {}};
  const auto roots = solve_spectrum(dimless);
  const int n_max = roots.empty() ? 0 : roots.back().branch.global_index();
  const auto infinite = n_max > 0 ? infinite_well_levels(well, n_max) : std::vector<double>{};
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& root : roots) {
    const int n = root.branch.global_index();
    const LevelEnergy level = energy_from_root(root.x, n, dimless, well);
    LevelRow row{n,
                 root.branch,
                 root.branch.family == Family::Xi ? Parity::Even : Parity::Odd,
                 root.matched,
                 root.x,
                 level.E_top,
                 level.E_bottom,
                 infinite[static_cast<std::size_t>(n - 1)],
                 garrett_energy(well, n),
                 {}};
    for (const auto& tag : methods) {
      MethodCell cell{tag, false, nan, nan, nan, nan};
      try {
        const RootResult r = approximate(root.branch, dimless.p, tag);
        cell.exists = std::isfinite(r.x);
        cell.x = r.x;
        cell.E_bottom = dimless.energy_scale * r.x * r.x;
        cell.abs_dev = cell.E_bottom - level.E_bottom;
        cell.rel_dev = cell.abs_dev / level.E_bottom;
      } catch (const Error&) {
        cell.exists = false;
      }
      row.cells.push_back(cell);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

SpectrumReport film_subbands(const FilmSpec& film, const std::vector<MethodTag>& methods) {
  return spectrum_report(freestanding_well(film), methods);
}

}  // namespace sqwell
