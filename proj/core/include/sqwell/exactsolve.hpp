#pragma once

#include <string>
#include <vector>

#include "sqwell/intervals.hpp"

namespace sqwell {

enum class Method {
  Exact,
  ParabolicSimple,
  ParabolicImproved,
  Cubic,
  Barker,
  Series,
  Garrett,
};

/// Method plus the truncation order for Series.
struct MethodTag {
  Method method = Method::Exact;
  int order = 0;

  /// exact | sp | ip | cubic | barker | seriesN | garrett
  std::string name() const;
  static MethodTag parse(const std::string& text);

  friend bool operator==(const MethodTag&, const MethodTag&) = default;
};

struct RootResult {
  BranchId branch;
  double p;
  double x;
  double residual;  // f(x) - sign * p
  MethodTag method;
  bool matched = true;          // root also satisfies the derivative matching condition
  bool low_confidence = false;  // formula used outside its recommended range
};

/// cos x / x for Xi, sin x / x for Zeta (sin x / x -> 1 at x = 0).
double defining_function(Family family, double x);

/// Residual of a candidate root against the branch equation.
double branch_residual(BranchId branch, double p, double x);

/// Whether a root x of the branch equation also satisfies the matching
/// condition: x tan x > 0 (even) or -x cot x > 0 (odd).
bool root_is_matched(BranchId branch, double x);

/// Unique root of the branch equation inside its monotony interval. At p = 0
/// returns the infinite-well root g pi / 2.
RootResult solve_branch(BranchId branch, double p);

/// One result per branch admitted by the refined count, ordered by global index.
std::vector<RootResult> solve_spectrum(const DimensionlessStrength& dimless);

}  // namespace sqwell
