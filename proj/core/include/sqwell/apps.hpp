#pragma once

#include <vector>

#include "sqwell/approx.hpp"
#include "sqwell/states.hpp"

namespace sqwell {

/// Metal film between two vacuum barriers of height W_m + E_F.
struct FilmSpec {
  double work_function;
  double fermi_energy;
  double thickness;
  double effective_mass = 1.0;  // in units of the electron mass
  UnitSystem units = units::electron_nm_ev;
};

WellSpec freestanding_well(const FilmSpec& film);

struct MethodCell {
  MethodTag method;
  bool exists;  // false when the method is undefined for this level at this p
  double x;
  double E_bottom;
  double abs_dev;  // E_method - E_exact, signed
  double rel_dev;
};

struct LevelRow {
  int n;
  BranchId branch;
  Parity parity;
  bool matched;
  double x_root;
  double E_top;
  double E_bottom;
  double E_infinite;
  double E_garrett;
  std::vector<MethodCell> cells;
};

struct SpectrumReport {
  WellSpec well;
  DimensionlessStrength dimless;
  int count_approximate;
  int count_refined;
  int count_matched;
  std::vector<LevelRow> rows;
};

/// One row per root of the refined spectrum; each requested method is
/// compared with the exact root of the same level.
SpectrumReport spectrum_report(const WellSpec& well, const std::vector<MethodTag>& methods);

SpectrumReport film_subbands(const FilmSpec& film, const std::vector<MethodTag>& methods);

}  // namespace sqwell
