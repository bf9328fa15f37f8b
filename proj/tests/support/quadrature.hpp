#pragma once

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "sqwell/states.hpp"

namespace oracle {

/// Integral of f over the real line for a well of width a: adaptive
/// Gauss-Kronrod inside, exp-sinh on each tail.
template <class F>
double integrate_line(F f, double a) {
  using boost::math::quadrature::exp_sinh;
  using boost::math::quadrature::gauss_kronrod;
  const double h = a / 2;
  const double inner = gauss_kronrod<double, 61>::integrate(f, -h, h, 15, 1e-14);
  exp_sinh<double> tail;
  const double right = tail.integrate([&](double t) { return f(h + t); }, 1e-14);
  const double left = tail.integrate([&](double t) { return f(-h - t); }, 1e-14);
  return inner + right + left;
}

inline double tail_quadrature(const sqwell::BoundState& s) {
  boost::math::quadrature::exp_sinh<double> tail;
  return tail.integrate([&](double t) { return std::pow(s(s.width / 2 + t), 2); }, 1e-14);
}

/// Sign changes of psi on a dense grid covering the well and 8 decay lengths.
inline int count_nodes(const sqwell::BoundState& s) {
  const double span = s.width / 2 + 8.0 / s.kappa;
  const int n = 200000;
  int nodes = 0;
  double prev = s(-span);
  for (int i = 1; i <= n; ++i) {
    const double x = -span + 2 * span * i / n;
    const double cur = s(x);
    if (prev != 0 && cur != 0 && (prev < 0) != (cur < 0)) ++nodes;
    if (cur != 0) prev = cur;
  }
  return nodes;
}

/// psi'' by Richardson-extrapolated central differences.
inline double second_derivative(const sqwell::BoundState& s, double x) {
  const double h = 2e-3 / std::max(s.k, s.kappa);
  const auto fd = [&](double step) {
    return (s(x + step) - 2 * s(x) + s(x - step)) / (step * step);
  };
  return (4 * fd(h / 2) - fd(h)) / 3;
}

}  // namespace oracle
