#pragma once

#include <optional>
#include <vector>

#include "sqwell/intervals.hpp"
#include "sqwell/rational_poly.hpp"

namespace sqwell::printed {

/// Published q_m(b) polynomials, transcribed as printed (including any
/// typesetting slips), m = 0..16. Empty optional beyond the published range.
std::optional<RationalPoly> q_polynomial(int m);

constexpr int max_published_order = 16;

/// Published reduced cubic form c0 + amp sin(asin(d0 - d1 p) / 3).
struct CubicDisplay {
  const char* tag;
  BranchId branch;
  double c0;
  double amp;
  double d0;
  double d1;
  bool known_discrepancy;
};

const std::vector<CubicDisplay>& cubic_displays();

}  // namespace sqwell::printed
