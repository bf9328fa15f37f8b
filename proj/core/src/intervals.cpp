#include "sqwell/intervals.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "sqwell/detail/bracketed_root.hpp"
#include "sqwell/error.hpp"

namespace sqwell {

namespace {

constexpr double pi = std::numbers::pi;

// Extremum of cos x / x: x sin x + cos x = 0 on ((n - 3/2) pi, (n - 1) pi).
double numeric_extremum_xi(int n) {
  const double lo = (n - 1.5) * pi;
  const double hi = (n - 1.0) * pi;
  const bool positive_left = n % 2 == 0;
  return detail::bracketed_root([](double x) { return x * std::sin(x) + std::cos(x); },
                                [](double x) { return x * std::cos(x); }, lo, hi, positive_left);
}

// Extremum of sin x / x: sin x - x cos x = 0 on ((n - 1) pi, (n - 1/2) pi).
double numeric_extremum_zeta(int n) {
  const double lo = (n - 1.0) * pi;
  const double hi = (n - 0.5) * pi;
  const bool positive_left = n % 2 == 0;
  return detail::bracketed_root([](double x) { return std::sin(x) - x * std::cos(x); },
                                [](double x) { return x * std::sin(x); }, lo, hi, positive_left);
}

constexpr int kMemoSize = 512;

struct ExtremumMemo {
  std::vector<double> xi;
  std::vector<double> zeta;
};

// Built once (thread-safe static init), read-only afterwards.
const ExtremumMemo& memo() {
  static const ExtremumMemo table = [] {
    ExtremumMemo m;
    m.xi.assign(kMemoSize + 1, 0.0);
    m.zeta.assign(kMemoSize + 1, 0.0);
    for (int n = 2; n <= kMemoSize; ++n) {
      m.xi[n] = numeric_extremum_xi(n);
      m.zeta[n] = numeric_extremum_zeta(n);
    }
    return m;
  }();
  return table;
}

double numeric_extremum(Family family, int n) {
  if (n <= kMemoSize) {
    const auto& m = memo();
    return family == Family::Xi ? m.xi[n] : m.zeta[n];
  }
  return family == Family::Xi ? numeric_extremum_xi(n) : numeric_extremum_zeta(n);
}

}  // namespace

BranchId BranchId::from_global(int global_index) {
  if (global_index < 1) {
    throw Error(ErrorCode::UnsupportedIndex, "global index must be >= 1");
  }
  if (global_index % 2 == 1) {
    return {Family::Xi, (global_index + 1) / 2};
  }
  return {Family::Zeta, global_index / 2};
}

std::string BranchId::label() const {
  return (family == Family::Xi ? "xi:" : "zeta:") + std::to_string(n);
}

BranchId BranchId::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::UnsupportedBranch, "expected xi:N or zeta:N, got '" + text + "'");
  }
  const std::string fam = text.substr(0, colon);
  const std::string num = text.substr(colon + 1);
  Family family{};
  if (fam == "xi") {
    family = Family::Xi;
  } else if (fam == "zeta") {
    family = Family::Zeta;
  } else {
    throw Error(ErrorCode::UnsupportedBranch, "unknown family '" + fam + "'");
  }
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(num, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != num.size() || num.empty() || n < 1) {
    throw Error(ErrorCode::UnsupportedIndex, "bad branch index in '" + text + "'");
  }
  return {family, n};
}

double extremum_root(Family family, int n, ExtremumMode mode) {
  if (n < 2) {
    throw Error(ErrorCode::UnsupportedIndex,
                "extremum roots exist for n >= 2 only, got n = " + std::to_string(n));
  }
  switch (mode) {
    case ExtremumMode::Numeric:
      return numeric_extremum(family, n);
    case ExtremumMode::Asymptotic:
      if (family == Family::Xi) {
        const double c = (n - 1) * pi;
        return c - c / (c * c - 1.0);
      } else {
        const double c = (n - 0.5) * pi;
        return c - 1.0 / c;
      }
    case ExtremumMode::Trigonometric:
      return family == Family::Xi ? (n - 1) * pi : (n - 0.5) * pi;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double extremum_value(Family family, int n, ExtremumMode mode) {
  if (family == Family::Zeta && n == 1) {
    return 1.0;
  }
  if (n < 2) {
    throw Error(ErrorCode::UnsupportedIndex, "xi_1 has no finite extremum");
  }
  const double sign = n % 2 == 1 ? 1.0 : -1.0;
  switch (mode) {
    case ExtremumMode::Numeric: {
      const double r = numeric_extremum(family, n);
      return family == Family::Xi ? std::cos(r) / r : std::sin(r) / r;
    }
    case ExtremumMode::Asymptotic:
    case ExtremumMode::Trigonometric:
      return sign / extremum_root(family, n, ExtremumMode::Trigonometric);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double anchor(BranchId branch) noexcept { return branch.global_index() * pi / 2.0; }

Bracket bracket_for(BranchId branch) {
  if (branch.n < 1) {
    throw Error(ErrorCode::UnsupportedIndex, "branch index must be >= 1");
  }
  Bracket b{branch, 0.0, anchor(branch), branch.sign(), 0.0};
  if (branch.n == 1) {
    b.existence_bound =
        branch.family == Family::Xi ? std::numeric_limits<double>::infinity() : 1.0;
    return b;
  }
  b.lo = extremum_root(branch.family, branch.n, ExtremumMode::Numeric);
  b.existence_bound = std::abs(extremum_value(branch.family, branch.n, ExtremumMode::Numeric));
  return b;
}

double matched_threshold(BranchId branch) noexcept {
  const int g = branch.global_index();
  if (g == 1) {
    return std::numeric_limits<double>::infinity();
  }
  return 2.0 / ((g - 1) * pi);
}

bool branch_admitted(BranchId branch, double p) {
  if (branch.family == Family::Xi && branch.n == 1) {
    return true;
  }
  if (branch.family == Family::Zeta && branch.n == 1) {
    return p <= 1.0;
  }
  return p <= std::abs(extremum_value(branch.family, branch.n, ExtremumMode::Numeric));
}

int count_bound_states(const DimensionlessStrength& dimless, CountMode mode) {
  const double P = dimless.P;
  const double p = dimless.p;
  switch (mode) {
    case CountMode::Approximate:
      return static_cast<int>(P / (pi / 2.0)) + 1;
    case CountMode::Refined: {
      int count = 0;
      for (int g = 1;; ++g) {
        if (!branch_admitted(BranchId::from_global(g), p)) {
          break;
        }
        ++count;
      }
      return count;
    }
    case CountMode::Matched: {
      int count = 0;
      for (int g = 1;; ++g) {
        if (!(p < matched_threshold(BranchId::from_global(g)))) {
          break;
        }
        ++count;
      }
      return count;
    }
  }
  return 0;
}

}  // namespace sqwell
