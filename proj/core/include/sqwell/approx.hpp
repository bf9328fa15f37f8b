#pragma once

#include "sqwell/exactsolve.hpp"
#include "sqwell/series.hpp"
#include "sqwell/wellcore.hpp"

namespace sqwell {

enum class ParabolicVariant { Simple, Improved };
enum class Zeta1Variant { Parabolic, Cubic };
enum class BarkerForm { Polynomial, Fractional };

/// Cubic a1 X + a2 X^2 + a3 X^3 (X = x - anchor) through the anchor zero with
/// the exact slope there and the extremum (X_M, M); depressed to
/// t^3 + A1 t + A0 with A0 = A0_const - A0_slope * p.
struct CubicCoefficients {
  BranchId branch;
  double X_M;
  double a1;
  double a2;
  double a3;
  double A1;
  double A0_const;
  double A0_slope;
};

/// Root in the form c0 + amp * sin(asin(d0 - d1 p) / 3).
struct CubicDisplayForm {
  double c0;
  double amp;
  double d0;
  double d1;

  double evaluate(double p) const;
};

CubicCoefficients cubic_coefficients(BranchId branch);
CubicDisplayForm display_form(const CubicCoefficients& coefficients);

/// Upper end of the definition interval in p (closed for Simple, open for
/// Improved and cubic).
double definition_bound(BranchId branch, ParabolicVariant variant);

RootResult parabolic(BranchId branch, double p, ParabolicVariant variant);
RootResult cubic(BranchId branch, double p);
RootResult zeta1_special(double p, Zeta1Variant variant);
RootResult barker(BranchId branch, double p, BarkerForm form = BarkerForm::Polynomial);
RootResult series_truncated(BranchId branch, double p, int order,
                            const SeriesTable& table = default_table());

/// b / (1 + p): the root whose square gives the Garrett energy.
RootResult garrett_root(BranchId branch, double p);

/// (P / (P + 1))^2 pi^2 hbar^2 n^2 / (2 m a^2), bottom-at-zero.
double garrett_energy(const WellSpec& well, int n);

/// Dispatch on a method tag; Exact goes to solve_branch.
RootResult approximate(BranchId branch, double p, MethodTag method);

}  // namespace sqwell
