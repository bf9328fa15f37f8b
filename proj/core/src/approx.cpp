#include "sqwell/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sqwell/error.hpp"

namespace sqwell {

namespace {

constexpr double pi = std::numbers::pi;

RootResult make_result(BranchId branch, double p, double x, MethodTag method) {
  RootResult r{branch, p, x, branch_residual(branch, p, x), method};
  return r;
}

void check_p(double p) {
  if (!(p >= 0.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::InvalidP, "p must be finite and >= 0, got " + std::to_string(p));
  }
}

[[noreturn]] void out_of_interval(BranchId branch, double p, double bound) {
  throw Error(ErrorCode::OutOfDefinitionInterval,
              branch.label() + " at p = " + std::to_string(p) + " (bound " +
                  std::to_string(bound) + ")");
}

double trig_extremum(BranchId branch) {
  return extremum_root(branch.family, branch.n, ExtremumMode::Trigonometric);
}

}  // namespace

double CubicDisplayForm::evaluate(double p) const {
  const double arg = std::clamp(d0 - d1 * p, -1.0, 1.0);
  return c0 + amp * std::sin(std::asin(arg) / 3.0);
}

CubicCoefficients cubic_coefficients(BranchId branch) {
  if (branch.n < 2) {
    throw Error(ErrorCode::UnsupportedBranch, "cubic form needs n >= 2, got " + branch.label());
  }
  const double b = anchor(branch);
  const double r = extremum_root(branch.family, branch.n, ExtremumMode::Numeric);
  const double M = extremum_value(branch.family, branch.n, ExtremumMode::Numeric);
  const double X_M = r - b;
  const double a1 = (branch.n % 2 == 0 ? 1.0 : -1.0) / b;
  const double a3 = -2.0 * M / (X_M * X_M * X_M) + a1 / (X_M * X_M);
  const double a2 = 3.0 * M / (X_M * X_M) - 2.0 * a1 / X_M;
  CubicCoefficients c{branch, X_M, a1, a2, a3, 0.0, 0.0, 0.0};
  c.A1 = a1 / a3 - a2 * a2 / (3.0 * a3 * a3);
  c.A0_const = 2.0 * a2 * a2 * a2 / (27.0 * a3 * a3 * a3) - a1 * a2 / (3.0 * a3 * a3);
  c.A0_slope = branch.sign() / a3;
  return c;
}

CubicDisplayForm display_form(const CubicCoefficients& c) {
  const double mag = std::abs(c.A1);
  const double k = std::sqrt(27.0) / (2.0 * std::pow(mag, 1.5));
  return {anchor(c.branch) - c.a2 / (3.0 * c.a3), 2.0 * std::sqrt(mag / 3.0), k * c.A0_const,
          k * c.A0_slope};
}

double definition_bound(BranchId branch, ParabolicVariant variant) {
  if (branch.family == Family::Zeta && branch.n == 1) {
    return 1.0;
  }
  if (branch.n < 2) {
    throw Error(ErrorCode::UnsupportedBranch, branch.label() + " has no parabolic form");
  }
  if (variant == ParabolicVariant::Simple) {
    return 1.0 / trig_extremum(branch);
  }
  return std::abs(extremum_value(branch.family, branch.n, ExtremumMode::Numeric));
}

RootResult parabolic(BranchId branch, double p, ParabolicVariant variant) {
  check_p(p);
  if (branch.family == Family::Zeta && branch.n == 1) {
    RootResult r = zeta1_special(p, Zeta1Variant::Parabolic);
    r.method = {variant == ParabolicVariant::Simple ? Method::ParabolicSimple
                                                    : Method::ParabolicImproved,
                0};
    return r;
  }
  const double bound = definition_bound(branch, variant);
  const double b = anchor(branch);
  if (variant == ParabolicVariant::Simple) {
    if (p > bound) out_of_interval(branch, p, bound);
    const double r0 = trig_extremum(branch);
    return make_result(branch, p, r0 + (pi / 2.0) * std::sqrt(1.0 - p * r0),
                       {Method::ParabolicSimple, 0});
  }
  if (p >= bound) out_of_interval(branch, p, bound);
  const double r = extremum_root(branch.family, branch.n, ExtremumMode::Numeric);
  return make_result(branch, p, r + (b - r) * std::sqrt(1.0 - p / bound),
                     {Method::ParabolicImproved, 0});
}

RootResult cubic(BranchId branch, double p) {
  check_p(p);
  if (branch.family == Family::Zeta && branch.n == 1) {
    return zeta1_special(p, Zeta1Variant::Cubic);
  }
  const double bound = definition_bound(branch, ParabolicVariant::Improved);
  if (p >= bound) out_of_interval(branch, p, bound);
  const CubicCoefficients c = cubic_coefficients(branch);
  const double mag = std::abs(c.A1);
  const double A0 = c.A0_const - c.A0_slope * p;
  const double arg = std::clamp(std::sqrt(27.0) / 2.0 * A0 / std::pow(mag, 1.5), -1.0, 1.0);
  const double x = anchor(branch) - c.a2 / (3.0 * c.a3) +
                   2.0 * std::sqrt(mag / 3.0) * std::sin(std::asin(arg) / 3.0);
  return make_result(branch, p, x, {Method::Cubic, 0});
}

RootResult zeta1_special(double p, Zeta1Variant variant) {
  check_p(p);
  const BranchId branch{Family::Zeta, 1};
  if (p > 1.0) out_of_interval(branch, p, 1.0);
  const double root = std::sqrt(1.0 - p);
  if (variant == Zeta1Variant::Parabolic) {
    return make_result(branch, p, pi * root, {Method::ParabolicImproved, 0});
  }
  const double theta = std::asin(std::pow(3.0, 1.5) / std::pow(2.0, 2.5) * root) / 3.0;
  const double x =
      pi * root / std::sqrt(2.0) / (-std::sin(theta) / std::sqrt(3.0) + std::cos(theta));
  return make_result(branch, p, x, {Method::Cubic, 0});
}

RootResult barker(BranchId branch, double p, BarkerForm form) {
  check_p(p);
  const double b = anchor(branch);
  double x = 0.0;
  if (form == BarkerForm::Polynomial) {
    const int g = branch.global_index();
    x = b * (1.0 - p + p * p - (1.0 + pi * pi * g * g / 24.0) * p * p * p);
  } else {
    const double d = 1.0 + p;
    x = b / d - p * p * p * b * b * b / (6.0 * std::pow(d, 6));
  }
  RootResult r = make_result(branch, p, x, {Method::Barker, 0});
  r.low_confidence = branch.n == 1;
  return r;
}

RootResult series_truncated(BranchId branch, double p, int order, const SeriesTable& table) {
  check_p(p);
  const double x = evaluate_series_at(branch, p, order, table);
  return make_result(branch, p, x, {Method::Series, order});
}

RootResult garrett_root(BranchId branch, double p) {
  check_p(p);
  return make_result(branch, p, anchor(branch) / (1.0 + p), {Method::Garrett, 0});
}

double garrett_energy(const WellSpec& well, int n) {
  if (n < 1) {
    throw Error(ErrorCode::UnsupportedIndex, "level index must be >= 1");
  }
  const double P = dimensionless_from_well(well).P;
  const double ratio = P / (P + 1.0);
  const double a = well.width();
  return ratio * ratio * pi * pi * well.hbar2_over_2m() * n * n / (a * a);
}

RootResult approximate(BranchId branch, double p, MethodTag method) {
  switch (method.method) {
    case Method::Exact: return solve_branch(branch, p);
    case Method::ParabolicSimple: return parabolic(branch, p, ParabolicVariant::Simple);
    case Method::ParabolicImproved: return parabolic(branch, p, ParabolicVariant::Improved);
    case Method::Cubic: return cubic(branch, p);
    case Method::Barker: return barker(branch, p);
    case Method::Series: return series_truncated(branch, p, method.order);
    case Method::Garrett: return garrett_root(branch, p);
  }
  throw Error(ErrorCode::UnsupportedBranch, "unknown method");
}

}  // namespace sqwell
