#pragma once

#include <string>

#include "sqwell/wellcore.hpp"

namespace sqwell {

/// Xi: even-parity roots of cos x / x = +-p. Zeta: odd-parity roots of sin x / x = +-p.
enum class Family { Xi, Zeta };

/// One root function xi_n or zeta_n. The global level index is 2n-1 for Xi
/// and 2n for Zeta, so X_g(0) = g pi / 2.
struct BranchId {
  Family family;
  int n;

  int global_index() const noexcept { return family == Family::Xi ? 2 * n - 1 : 2 * n; }

  /// +1 or -1: right-hand side of the defining equation is sign * p.
  int sign() const noexcept { return n % 2 == 1 ? 1 : -1; }

  static BranchId from_global(int global_index);

  /// "xi:N" / "zeta:N".
  std::string label() const;
  static BranchId parse(const std::string& text);

  friend bool operator==(const BranchId&, const BranchId&) = default;
};

enum class ExtremumMode {
  Numeric,        // root of x tan x = -1 (Xi) / tan x = x (Zeta) to machine precision
  Asymptotic,     // leading-order large-n formulas
  Trigonometric,  // extrema of cos x, sin x: r = (n-1) pi, (n-1/2) pi; |M| = 1/r
};

/// Monotony interval of one branch. The target function is strictly monotone
/// on (lo, hi); `existence_bound` is |M| of the extremum at `lo`.
struct Bracket {
  BranchId branch;
  double lo;
  double hi;
  int sign;
  double existence_bound;
};

double extremum_root(Family family, int n, ExtremumMode mode);
double extremum_value(Family family, int n, ExtremumMode mode);

Bracket bracket_for(BranchId branch);

/// Zero of cos x (Xi) or sin x (Zeta) that closes the bracket: g pi / 2.
double anchor(BranchId branch) noexcept;

/// Value of p at which the branch root reaches x = P (kappa = 0). Below it
/// the root also satisfies the derivative matching condition; between this
/// and the existence bound the root lies on the wrong side of the tangent's
/// pole and is not a normalizable state.
double matched_threshold(BranchId branch) noexcept;

/// Whether the refined (closed-interval) rule admits the branch at p.
bool branch_admitted(BranchId branch, double p);

enum class CountMode {
  Approximate,  // int(P / (pi/2)) + 1
  Refined,      // branches with p <= |M| (numeric extrema)
  Matched,      // branches whose root satisfies the matching condition
};

int count_bound_states(const DimensionlessStrength& dimless, CountMode mode);

}  // namespace sqwell
