#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "sqwell/exactsolve.hpp"
#include "sqwell/wellcore.hpp"

namespace sqwell {

enum class Parity { Even, Odd };

/// Normalized bound state of a symmetric well centred on x = 0:
/// A cos kx / A sin kx inside, B exp(-kappa (|x| - a/2)) outside (times
/// sign(x) for odd states).
struct BoundState {
  LevelEnergy level;
  Parity parity;
  double inside_amplitude;
  double tail_amplitude;
  double k;
  double kappa;
  double width;
  double depth;

  double operator()(double x) const;
  double derivative(double x) const;

  /// Integral of psi^2 over x > a/2.
  double right_tail_probability() const;
  double interior_probability() const;
};

/// Potential in the bottom-at-zero convention: 0 inside, U outside.
double potential(const WellSpec& well, double x);

BoundState build_state(const WellSpec& well, const RootResult& root);

/// States for every root of the spectrum that is a normalizable bound state,
/// in order of global index.
std::vector<BoundState> build_bound_states(const WellSpec& well);

struct PerturbationResult {
  double shift;
  bool warning;  // perturbation not small against the reference energy
  double ratio;
};

/// First-order shift from raising the right barrier from V1 to V2.
PerturbationResult perturbation_shift_step(const BoundState& state, double V1, double V2);

/// First-order shift from v cos(2 pi z / d0) applied inside the well.
PerturbationResult perturbation_shift_corrugated(const BoundState& state, double v, double d0);

std::vector<std::pair<double, double>> sample_wavefunction(const BoundState& state, double x_min,
                                                           double x_max, int points);

/// "x,psi" header then one row per sample.
void write_wavefunction_csv(std::ostream& out, const BoundState& state, double x_min,
                            double x_max, int points);

}  // namespace sqwell
