#include "sqwell/exactsolve.hpp"

#include <cmath>
#include <string>

#include "sqwell/detail/bracketed_root.hpp"
#include "sqwell/error.hpp"

namespace sqwell {

std::string MethodTag::name() const {
  switch (method) {
    case Method::Exact: return "exact";
    case Method::ParabolicSimple: return "sp";
    case Method::ParabolicImproved: return "ip";
    case Method::Cubic: return "cubic";
    case Method::Barker: return "barker";
    case Method::Series: return "series" + std::to_string(order);
    case Method::Garrett: return "garrett";
  }
  return "unknown";
}

MethodTag MethodTag::parse(const std::string& text) {
  if (text == "exact") return {Method::Exact, 0};
  if (text == "sp") return {Method::ParabolicSimple, 0};
  if (text == "ip") return {Method::ParabolicImproved, 0};
  if (text == "cubic") return {Method::Cubic, 0};
  if (text == "barker") return {Method::Barker, 0};
  if (text == "garrett") return {Method::Garrett, 0};
  if (text.rfind("series", 0) == 0 && text.size() > 6) {
    const std::string digits = text.substr(6);
    std::size_t used = 0;
    int order = -1;
    try {
      order = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == digits.size() && order >= 0) {
      return {Method::Series, order};
    }
  }
  throw Error(ErrorCode::UnsupportedBranch, "unknown method '" + text + "'");
}

double defining_function(Family family, double x) {
  if (family == Family::Xi) {
    return std::cos(x) / x;
  }
  return x == 0.0 ? 1.0 : std::sin(x) / x;
}

double branch_residual(BranchId branch, double p, double x) {
  return defining_function(branch.family, x) - branch.sign() * p;
}

bool root_is_matched(BranchId branch, double x) {
  // Even: kappa a/2 = x tan x. Odd: kappa a/2 = -x cot x. sin and cos must
  // share sign (even) or differ (odd).
  const double s = std::sin(x);
  const double c = std::cos(x);
  return branch.family == Family::Xi ? s * c > 0.0 : s * c < 0.0;
}

RootResult solve_branch(BranchId branch, double p) {
  if (!(p >= 0.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::InvalidP, "p must be finite and >= 0, got " + std::to_string(p));
  }
  const Bracket bracket = bracket_for(branch);
  RootResult result{branch, p, 0.0, 0.0, {Method::Exact, 0}};
  if (p == 0.0) {
    result.x = bracket.hi;
    result.residual = branch_residual(branch, p, result.x);
    return result;
  }
  if (p >= bracket.existence_bound) {
    throw Error(ErrorCode::BranchNotBound,
                branch.label() + " has no root at p = " + std::to_string(p) +
                    " (existence bound " + std::to_string(bracket.existence_bound) + ")");
  }

  // s * f(x) falls monotonically from |M| at lo to 0 at hi.
  const double s = bracket.sign;
  const auto g = [&](double x) { return s * defining_function(branch.family, x) - p; };
  const auto dg = [&](double x) {
    if (branch.family == Family::Xi) {
      return s * (-std::sin(x) / x - std::cos(x) / (x * x));
    }
    return s * (x * std::cos(x) - std::sin(x)) / (x * x);
  };
  const double x = detail::bracketed_root(g, dg, bracket.lo, bracket.hi, true);

  // Roots must sit strictly inside the extremum end; the anchor end is only
  // approached as p -> 0.
  const double margin = 1e-15;
  const bool above_lo = bracket.lo == 0.0 ? x > 0.0 : x > bracket.lo * (1.0 + margin);
  if (!above_lo) {
    throw Error(ErrorCode::BranchNotBound,
                branch.label() + " root at p = " + std::to_string(p) + " hits the bracket endpoint");
  }
  result.x = x;
  result.residual = branch_residual(branch, p, x);
  result.matched = root_is_matched(branch, x);
  return result;
}

std::vector<RootResult> solve_spectrum(const DimensionlessStrength& dimless) {
  const double p = dimless.p;
  const int count = count_bound_states(dimless, CountMode::Refined);
  std::vector<RootResult> roots;
  roots.reserve(static_cast<std::size_t>(count));
  for (int g = 1; g <= count; ++g) {
    const BranchId branch = BranchId::from_global(g);
    // A branch exactly at its threshold is counted but its root is the
    // extremum itself (x = 0 for zeta_1); it carries no interior root.
    if (p >= bracket_for(branch).existence_bound) {
      continue;
    }
    roots.push_back(solve_branch(branch, p));
  }
  return roots;
}

}  // namespace sqwell
