#include "sqwell/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sqwell/error.hpp"
#include "sqwell/format.hpp"

namespace sqwell {

namespace {

constexpr double kWarnRatio = 0.2;

// Integral of cos(alpha z) over (-h, h).
double cos_integral(double alpha, double h) {
  const double t = alpha * h;
  if (std::abs(t) < 1e-4) {
    return 2.0 * h * (1.0 - t * t / 6.0 + t * t * t * t / 120.0);
  }
  return 2.0 * std::sin(t) / alpha;
}

}  // namespace

double BoundState::operator()(double x) const {
  const double h = width / 2.0;
  const double ax = std::abs(x);
  if (ax <= h) {
    return inside_amplitude * (parity == Parity::Even ? std::cos(k * x) : std::sin(k * x));
  }
  const double tail = tail_amplitude * std::exp(-kappa * (ax - h));
  return parity == Parity::Odd && x < 0 ? -tail : tail;
}

double BoundState::derivative(double x) const {
  const double h = width / 2.0;
  const double ax = std::abs(x);
  if (ax <= h) {
    return inside_amplitude * k * (parity == Parity::Even ? -std::sin(k * x) : std::cos(k * x));
  }
  // d/dx of B e^{-kappa(|x|-h)} is -sign(x) kappa (...); odd states carry sign(x).
  const double tail = -kappa * tail_amplitude * std::exp(-kappa * (ax - h));
  if (parity == Parity::Even) {
    return x < 0 ? -tail : tail;
  }
  return tail;
}

double BoundState::right_tail_probability() const {
  return tail_amplitude * tail_amplitude / (2.0 * kappa);
}

double BoundState::interior_probability() const {
  const double s = std::sin(k * width) / (2.0 * k);
  const double half = width / 2.0;
  return inside_amplitude * inside_amplitude * (parity == Parity::Even ? half + s : half - s);
}

double potential(const WellSpec& well, double x) {
  return std::abs(x) <= well.width() / 2.0 ? 0.0 : well.depth();
}

BoundState build_state(const WellSpec& well, const RootResult& root) {
  if (root.method.method != Method::Exact) {
    throw Error(ErrorCode::NotABoundState, "state needs an exact root, got " + root.method.name());
  }
  if (!root.matched) {
    throw Error(ErrorCode::NotABoundState,
                root.branch.label() + " root " + std::to_string(root.x) +
                    " does not satisfy the matching condition");
  }
  const DimensionlessStrength dimless = dimensionless_from_well(well);
  if (std::abs(dimless.p - root.p) > 1e-12 * dimless.p) {
    throw Error(ErrorCode::NotABoundState, "root was solved for a different well");
  }
  LevelEnergy level{};
  try {
    level = energy_from_root(root.x, root.branch.global_index(), dimless, well);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotABoundState, e.what());
  }
  if (!(level.kappa > 0.0)) {
    throw Error(ErrorCode::NotABoundState, "kappa <= 0");
  }
  const Parity parity = root.branch.family == Family::Xi ? Parity::Even : Parity::Odd;
  const double a = well.width();
  const double k = level.k;
  const double kappa = level.kappa;
  const double edge = parity == Parity::Even ? std::cos(k * a / 2.0) : std::sin(k * a / 2.0);
  const double s = std::sin(k * a) / (2.0 * k);
  const double inv_a2 =
      a / 2.0 + (parity == Parity::Even ? s : -s) + edge * edge / kappa;
  const double A = 1.0 / std::sqrt(inv_a2);
  return {level, parity, A, A * edge, k, kappa, a, well.depth()};
}

std::vector<BoundState> build_bound_states(const WellSpec& well) {
  std::vector<BoundState> states;
  for (const auto& root : solve_spectrum(dimensionless_from_well(well))) {
    if (root.matched) {
      states.push_back(build_state(well, root));
    }
  }
  return states;
}

PerturbationResult perturbation_shift_step(const BoundState& state, double V1, double V2) {
  const double delta = V2 - V1;
  const double ref = std::min(V1, V2);
  const double ratio = ref > 0.0 ? std::abs(delta) / ref : std::abs(delta);
  return {delta * state.right_tail_probability(), ratio > kWarnRatio, ratio};
}

PerturbationResult perturbation_shift_corrugated(const BoundState& state, double v, double d0) {
  if (!(d0 > 0.0)) {
    throw Error(ErrorCode::NonPositivePeriod, "period must be > 0, got " + std::to_string(d0));
  }
  const double q = 2.0 * std::numbers::pi / d0;
  const double h = state.width / 2.0;
  const double k2 = 2.0 * state.k;
  // cos^2 = (1 + cos 2kz) / 2, sin^2 = (1 - cos 2kz) / 2
  const double mixed = 0.5 * (cos_integral(q - k2, h) + cos_integral(q + k2, h));
  const double sgn = state.parity == Parity::Even ? 1.0 : -1.0;
  const double A2 = state.inside_amplitude * state.inside_amplitude;
  const double integral = 0.5 * A2 * (cos_integral(q, h) + sgn * mixed);
  const double ratio = state.depth > 0.0 ? std::abs(v) / state.depth : std::abs(v);
  return {v * integral, ratio > kWarnRatio, ratio};
}

std::vector<std::pair<double, double>> sample_wavefunction(const BoundState& state, double x_min,
                                                           double x_max, int points) {
  std::vector<std::pair<double, double>> out;
  if (points <= 0) return out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double x =
        points == 1 ? x_min : x_min + (x_max - x_min) * static_cast<double>(i) / (points - 1);
    out.emplace_back(x, state(x));
  }
  return out;
}

void write_wavefunction_csv(std::ostream& out, const BoundState& state, double x_min,
                            double x_max, int points) {
  out << "x,psi\n";
  for (const auto& [x, psi] : sample_wavefunction(state, x_min, x_max, points)) {
    out << format_number(x) << ',' << format_number(psi) << '\n';
  }
}

}  // namespace sqwell
