#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sqwell/exactsolve.hpp"
#include "sqwell/rational_poly.hpp"

namespace sqwell {

/// q_0(b) .. q_max_order(b): X(x) = b * sum_m q_m(b) x^m solves
/// dX/dx = -X / (sqrt(1 - x^2 X^2) + x) with X(0) = b.
struct SeriesTable {
  int max_order = -1;
  std::vector<RationalPoly> polys;

  const RationalPoly& q(int m) const;
};

/// Order-by-order formal power series solution, exact over Q[b]. For m up to
/// 16 the degree law (q_{2n-1}, q_{2n} both of degree 2n-2) and the sign law
/// (every coefficient of q_m has sign (-1)^m) are checked; a violation throws
/// std::logic_error.
SeriesTable generate_q_table(int max_order);

/// Shared table of order 16, generated once.
const SeriesTable& default_table();

/// Orders up to which the sign law was checked during generation.
constexpr int kLawCheckedOrder = 16;

/// Whether every coefficient of q_m has sign (-1)^m; report-only beyond 16.
bool sign_law_holds(const RationalPoly& q, int m);

struct CoefficientMismatch {
  int power;
  Rational printed;
  Rational computed;
};

struct PolyCheck {
  int m;
  bool verifiable;  // false beyond the published range
  bool pass;
  std::vector<CoefficientMismatch> mismatches;
};

struct VerificationReport {
  std::vector<PolyCheck> entries;

  bool all_pass() const;
};

VerificationReport verify_against_published(const SeriesTable& table);

/// Numeric q_0(b) .. q_order(b).
std::vector<double> specialize(const SeriesTable& table, double b, int order);

/// b * sum_{m <= order} q_m(b) p^m with b = g pi / 2, Horner in p.
double evaluate_series_at(BranchId branch, double p, int order,
                          const SeriesTable& table = default_table());

/// Same sum at arbitrary precision; Real needs construction from a decimal
/// string and the usual arithmetic.
template <class Real>
Real evaluate_series(const SeriesTable& table, const Real& b, const Real& p, int order) {
  Real acc = Real(0);
  for (int m = order; m >= 0; --m) {
    Real qm = Real(0);
    const auto& c = table.q(m).coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      qm = qm * b + Real(it->get_num().get_str()) / Real(it->get_den().get_str());
    }
    acc = acc * p + qm;
  }
  return b * acc;
}

/// Local Taylor expansion of the branch ODE about (x0, X0).
struct OdeState {
  double x0;
  double X0;
  std::vector<double> coefficients;  // X(x0 + t) = sum_k c_k t^k

  double evaluate(double t) const;
};

/// Floating Taylor coefficients c_0..c_order of the solution through (x0, X0).
/// Throws StepUnderflow when 1 - x0^2 X0^2 <= 0.
OdeState local_expansion(double x0, double X0, int order);

struct OdeOptions {
  int local_order = 8;
  double tolerance = 1e-12;
};

/// Integrates the branch ODE from (0, g pi / 2) to p_target by repeated local
/// re-expansion. Steps are sized so the last retained term stays below
/// tolerance * |X|; a step below 1e-12 raises StepUnderflow, as does a target at or
/// beyond the matched threshold, where sqrt(1 - p^2 X^2) reaches zero.
RootResult ode_continue(BranchId branch, double p_target, OdeOptions options = {});

/// Number of local expansions used by the last ode_continue on this thread.
int last_ode_step_count() noexcept;

/// Text form: comment lines start with '#', then "max_order N", then one line
/// "qM c0 c1 ..." per polynomial with exact num/den coefficients by ascending
/// power of b.
std::string export_table(const SeriesTable& table);
SeriesTable parse_table(std::string_view text);

}  // namespace sqwell
