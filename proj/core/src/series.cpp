#include "sqwell/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sqwell/error.hpp"
#include "sqwell/reference.hpp"

namespace sqwell {

namespace {

int expected_degree(int m) { return m == 0 ? 0 : 2 * ((m - 1) / 2); }

thread_local int g_last_steps = 0;

}  // namespace

const RationalPoly& SeriesTable::q(int m) const {
  if (m < 0 || m > max_order) {
    throw Error(ErrorCode::OrderUnavailable,
                "q_" + std::to_string(m) + " not in table of order " + std::to_string(max_order));
  }
  return polys[static_cast<std::size_t>(m)];
}

bool sign_law_holds(const RationalPoly& q, int m) {
  const int want = m % 2 == 0 ? 1 : -1;
  for (const auto& c : q.coefficients()) {
    if (sgn(c) != 0 && sgn(c) != want) {
      return false;
    }
  }
  return true;
}

SeriesTable generate_q_table(int max_order) {
  if (max_order < 0) {
    throw std::invalid_argument("max_order must be >= 0");
  }
  const auto n = static_cast<std::size_t>(max_order);
  // S = X, T = x S, A = 1 - T^2, W = sqrt(A), D = W + x, Q = S / D, S' = -Q.
  std::vector<RationalPoly> S(n + 1), A(n), W(n), D(n), Q(n);
  S[0] = RationalPoly::monomial(Rational(1), 1);
  for (std::size_t k = 0; k < n; ++k) {
    // [x^k] (x S)^2 = sum_{i+j = k-2} S_i S_j
    A[k] = k == 0 ? RationalPoly::constant(Rational(1)) : RationalPoly();
    if (k >= 2) {
      for (std::size_t i = 0; i <= k - 2; ++i) {
        A[k] -= S[i] * S[k - 2 - i];
      }
    }
    if (k == 0) {
      W[0] = RationalPoly::constant(Rational(1));
    } else {
      RationalPoly acc = A[k];
      for (std::size_t j = 1; j < k; ++j) {
        acc -= W[j] * W[k - j];
      }
      W[k] = acc * Rational(Rational(1) / 2);
    }
    D[k] = W[k];
    if (k == 1) {
      D[k] += RationalPoly::constant(Rational(1));
    }
    RationalPoly qk = S[k];
    for (std::size_t j = 1; j <= k; ++j) {
      qk -= D[j] * Q[k - j];
    }
    Q[k] = qk;
    S[k + 1] = Q[k] * Rational(Rational(-1) / static_cast<long>(k + 1));
  }

  SeriesTable table;
  table.max_order = max_order;
  table.polys.reserve(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    RationalPoly q = S[m].divided_by_variable();
    const int mi = static_cast<int>(m);
    if (mi <= kLawCheckedOrder) {
      if (q.degree() != expected_degree(mi)) {
        throw std::logic_error("degree law violated at q_" + std::to_string(m));
      }
      if (!sign_law_holds(q, mi)) {
        throw std::logic_error("sign law violated at q_" + std::to_string(m));
      }
    }
    table.polys.push_back(std::move(q));
  }
  return table;
}

const SeriesTable& default_table() {
  static const SeriesTable table = generate_q_table(16);
  return table;
}

bool VerificationReport::all_pass() const {
  for (const auto& e : entries) {
    if (e.verifiable && !e.pass) return false;
  }
  return true;
}

VerificationReport verify_against_published(const SeriesTable& table) {
  VerificationReport report;
  for (int m = 0; m <= table.max_order; ++m) {
    PolyCheck check{m, false, false, {}};
    const auto printed = printed::q_polynomial(m);
    if (printed) {
      check.verifiable = true;
      const RationalPoly& computed = table.q(m);
      const int top = std::max(printed->degree(), computed.degree());
      for (int k = 0; k <= top; ++k) {
        const Rational a = printed->coefficient(k);
        const Rational b = computed.coefficient(k);
        if (a != b) {
          check.mismatches.push_back({k, a, b});
        }
      }
      check.pass = check.mismatches.empty();
    }
    report.entries.push_back(std::move(check));
  }
  return report;
}

std::vector<double> specialize(const SeriesTable& table, double b, int order) {
  if (order > table.max_order) {
    throw Error(ErrorCode::OrderUnavailable,
                "order " + std::to_string(order) + " exceeds table order " +
                    std::to_string(table.max_order));
  }
  std::vector<double> q;
  q.reserve(static_cast<std::size_t>(order) + 1);
  for (int m = 0; m <= order; ++m) {
    q.push_back(table.q(m).evaluate(b));
  }
  return q;
}

double evaluate_series_at(BranchId branch, double p, int order, const SeriesTable& table) {
  if (order < 0) {
    throw Error(ErrorCode::OrderUnavailable, "order must be >= 0");
  }
  const double b = anchor(branch);
  const auto q = specialize(table, b, order);
  double acc = 0.0;
  for (auto it = q.rbegin(); it != q.rend(); ++it) {
    acc = acc * p + *it;
  }
  return b * acc;
}

double OdeState::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

OdeState local_expansion(double x0, double X0, int order) {
  const auto n = static_cast<std::size_t>(order);
  std::vector<double> S(n + 1, 0.0), T(n, 0.0), W(n, 0.0), D(n, 0.0), Q(n, 0.0);
  S[0] = X0;
  for (std::size_t k = 0; k < n; ++k) {
    T[k] = x0 * S[k] + (k > 0 ? S[k - 1] : 0.0);
    double a = k == 0 ? 1.0 : 0.0;
    for (std::size_t i = 0; i <= k; ++i) {
      a -= T[i] * T[k - i];
    }
    if (k == 0) {
      if (!(a > 0.0)) {
        throw Error(ErrorCode::StepUnderflow,
                    "1 - x^2 X^2 <= 0 at x = " + std::to_string(x0));
      }
      W[0] = std::sqrt(a);
    } else {
      for (std::size_t j = 1; j < k; ++j) {
        a -= W[j] * W[k - j];
      }
      W[k] = a / (2.0 * W[0]);
    }
    D[k] = W[k] + (k == 0 ? x0 : 0.0) + (k == 1 ? 1.0 : 0.0);
    double qk = S[k];
    for (std::size_t j = 1; j <= k; ++j) {
      qk -= D[j] * Q[k - j];
    }
    Q[k] = qk / D[0];
    S[k + 1] = -Q[k] / static_cast<double>(k + 1);
  }
  return {x0, X0, std::move(S)};
}

RootResult ode_continue(BranchId branch, double p_target, OdeOptions options) {
  g_last_steps = 0;
  if (!(p_target >= 0.0) || !std::isfinite(p_target)) {
    throw Error(ErrorCode::InvalidP, "p must be finite and >= 0");
  }
  if (options.local_order < 4) {
    throw Error(ErrorCode::OrderUnavailable, "local order must be >= 4");
  }
  const Bracket bracket = bracket_for(branch);
  if (p_target >= bracket.existence_bound) {
    throw Error(ErrorCode::BranchNotBound, branch.label() + " has no root at p = " +
                                               std::to_string(p_target));
  }
  // past this point the ODE follows |cos X| and leaves the branch
  const double singular = matched_threshold(branch);
  if (p_target >= singular) {
    throw Error(ErrorCode::StepUnderflow, branch.label() + ": sqrt(1 - p^2 X^2) vanishes at p = " +
                                              std::to_string(singular));
  }
  const int order = options.local_order;
  double x = 0.0;
  double X = anchor(branch);
  constexpr int max_steps = 1000000;
  while (x < p_target) {
    const OdeState st = local_expansion(x, X, order);
    double h = std::numeric_limits<double>::infinity();
    for (int k : {order, order - 1}) {
      const double c = std::abs(st.coefficients[static_cast<std::size_t>(k)]);
      if (c > 0.0) {
        h = std::min(h, std::pow(options.tolerance * std::abs(X) / c, 1.0 / k));
      }
    }
    const double remaining = p_target - x;
    if (h >= remaining) {
      X = st.evaluate(remaining);
      x = p_target;
    } else {
      if (h < 1e-12) {
        throw Error(ErrorCode::StepUnderflow, branch.label() + " step " + std::to_string(h) +
                                                  " at x = " + std::to_string(x));
      }
      X = st.evaluate(h);
      x += h;
    }
    if (++g_last_steps > max_steps) {
      throw Error(ErrorCode::StepUnderflow, "step budget exhausted");
    }
  }
  RootResult result{branch, p_target, X, branch_residual(branch, p_target, X),
                    {Method::Series, order}};
  result.matched = p_target == 0.0 || root_is_matched(branch, X);
  return result;
}

int last_ode_step_count() noexcept { return g_last_steps; }

std::string export_table(const SeriesTable& table) {
  std::ostringstream out;
  out << "# q_m(b): exact coefficients num/den of b^0, b^1, ...\n";
  out << "max_order " << table.max_order << "\n";
  for (int m = 0; m <= table.max_order; ++m) {
    out << "q" << m;
    for (const auto& c : table.q(m).coefficients()) {
      out << ' ' << format_rational(c);
    }
    out << "\n";
  }
  return out.str();
}

SeriesTable parse_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  SeriesTable table;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string head;
    fields >> head;
    if (head == "max_order") {
      fields >> table.max_order;
      continue;
    }
    if (head.size() < 2 || head[0] != 'q') {
      throw std::invalid_argument("bad table line: " + line);
    }
    const int m = std::stoi(head.substr(1));
    if (m != static_cast<int>(table.polys.size())) {
      throw std::invalid_argument("q lines out of order at " + head);
    }
    std::vector<Rational> c;
    std::string token;
    while (fields >> token) {
      c.push_back(parse_rational(token));
    }
    table.polys.emplace_back(std::move(c));
  }
  if (table.max_order != static_cast<int>(table.polys.size()) - 1) {
    throw std::invalid_argument("max_order does not match the number of q lines");
  }
  return table;
}

}  // namespace sqwell
