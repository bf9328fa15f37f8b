#pragma once

#include <cmath>

namespace sqwell::detail {

/// Root of a function whose sign pattern on (lo, hi) is known: with
/// `positive_left`, g > 0 left of the root and g < 0 right of it (otherwise
/// reversed). The endpoints are never evaluated, so poles there are fine.
///
/// Bisection down to a 1e-6 wide bracket, then Newton with bisection fallback
/// whenever the Newton step leaves the current bracket.
template <class G, class DG>
double bracketed_root(G&& g, DG&& dg, double lo, double hi, bool positive_left) {
  const auto left_of_root = [&](double gx) { return positive_left ? gx > 0.0 : gx < 0.0; };

  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0) {
      return mid;
    }
    (left_of_root(gm) ? lo : hi) = mid;
  }

  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 100; ++iter) {
    const double gx = g(x);
    if (gx == 0.0) {
      return x;
    }
    (left_of_root(gx) ? lo : hi) = x;
    const double slope = dg(x);
    double next = x - gx / slope;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    const double step = std::abs(next - x);
    x = next;
    if (step <= 4e-16 * std::abs(x) || hi - lo <= 4e-16 * std::abs(x)) {
      break;
    }
  }
  return x;
}

}  // namespace sqwell::detail
