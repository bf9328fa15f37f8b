#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "sqwell/error.hpp"
#include "sqwell/exactsolve.hpp"

using namespace sqwell;
using std::numbers::pi;

TEST_CASE("method tags") {
  for (const char* name : {"exact", "sp", "ip", "cubic", "barker", "garrett", "series0",
                           "series16"}) {
    CHECK(MethodTag::parse(name).name() == name);
  }
  CHECK(MethodTag::parse("series7").order == 7);
  CHECK_THROWS_AS(MethodTag::parse("series"), Error);
  CHECK_THROWS_AS(MethodTag::parse("series-1"), Error);
  CHECK_THROWS_AS(MethodTag::parse("newton"), Error);
}

TEST_CASE("zeta_1 limits and spot values") {
  CHECK(solve_branch({Family::Zeta, 1}, 0.0).x == doctest::Approx(pi));
  CHECK(solve_branch({Family::Zeta, 1}, 1e-12).x == doctest::Approx(pi).epsilon(1e-10));
  const RootResult r = solve_branch({Family::Zeta, 1}, 0.1);
  CHECK(r.x == doctest::Approx(2.852).epsilon(1e-3));
  CHECK(r.x == doctest::Approx(static_cast<double>(oracle::branch_root(false, 1, 0.1L)))
                   .epsilon(1e-14));
  CHECK(std::abs(r.residual) < 1e-12);
  CHECK(r.method.method == Method::Exact);
}

TEST_CASE("xi_1 at p = 1 solves cos x = x") {
  const RootResult r = solve_branch({Family::Xi, 1}, 1.0);
  CHECK(r.x == doctest::Approx(0.739085133215160641).epsilon(1e-15));
  CHECK(r.x == doctest::Approx(static_cast<double>(oracle::branch_root(true, 1, 1.0L))));
}

TEST_CASE("errors") {
  const auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidRoot;
  };
  CHECK(code_of([] { solve_branch({Family::Zeta, 1}, 1.0); }) == ErrorCode::BranchNotBound);
  CHECK(code_of([] { solve_branch({Family::Zeta, 2}, 0.25); }) == ErrorCode::BranchNotBound);
  CHECK(code_of([] { solve_branch({Family::Xi, 1}, -0.1); }) == ErrorCode::InvalidP);
  CHECK(code_of([] { solve_branch({Family::Xi, 1}, std::nan("")); }) == ErrorCode::InvalidP);
}

TEST_CASE("random roots agree with the bisection oracle") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 300; ++i) {
    const int g = 1 + static_cast<int>(rng() % 16);
    const BranchId b = BranchId::from_global(g);
    const double bound = std::min(bracket_for(b).existence_bound, 4.0);
    const double p = std::uniform_real_distribution<double>(1e-6, bound)(rng);
    const RootResult r = solve_branch(b, p);
    const double o = static_cast<double>(oracle::branch_root(b.family == Family::Xi, b.n, p));
    CHECK(std::abs(r.residual) < 1e-12);
    CHECK(std::abs(r.x - o) < 1e-11);
    const Bracket br = bracket_for(b);
    CHECK(r.x > br.lo);
    CHECK(r.x < br.hi);
  }
}

TEST_CASE("deterministic") {
  for (int g = 1; g <= 8; ++g) {
    const RootResult a = solve_branch(BranchId::from_global(g), 0.03);
    const RootResult b = solve_branch(BranchId::from_global(g), 0.03);
    CHECK(a.x == b.x);
  }
}

TEST_CASE("uniqueness: one sign change per bracket") {
  for (int g = 1; g <= 12; ++g) {
    const BranchId b = BranchId::from_global(g);
    const Bracket br = bracket_for(b);
    for (double frac : {0.1, 0.5, 0.9}) {
      const double p = std::isinf(br.existence_bound) ? 3.0 * frac : br.existence_bound * frac;
      const double lo = br.lo == 0.0 ? 1e-9 : br.lo;
      int changes = 0;
      double prev = branch_residual(b, p, lo);
      for (int i = 1; i <= 5000; ++i) {
        const double v = branch_residual(b, p, lo + (br.hi - lo) * i / 5000.0);
        if ((v < 0) != (prev < 0)) ++changes;
        prev = v;
      }
      CHECK(changes == 1);
    }
  }
}

TEST_CASE("inverse-function round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const BranchId b = BranchId::from_global(1 + static_cast<int>(rng() % 10));
    const Bracket br = bracket_for(b);
    const double lo = br.lo == 0.0 ? 0.05 : br.lo;
    const double t = std::uniform_real_distribution<double>(0.02, 0.98)(rng);
    const double x0 = lo + (br.hi - lo) * t;
    const double p = b.sign() * defining_function(b.family, x0);
    CHECK(solve_branch(b, p).x == doctest::Approx(x0).epsilon(1e-10));
  }
}

TEST_CASE("strictly decreasing in p") {
  for (int g = 1; g <= 8; ++g) {
    const BranchId b = BranchId::from_global(g);
    const double bound = std::min(bracket_for(b).existence_bound, 2.0);
    double prev = solve_branch(b, 0.0).x;
    for (int i = 1; i < 200; ++i) {
      const double x = solve_branch(b, bound * i / 200.0).x;
      CHECK(x < prev);
      prev = x;
    }
  }
}

TEST_CASE("spectrum") {
  const auto at = [](double P) { return solve_spectrum(DimensionlessStrength::from_P(P)); };
  // zeta_1 is marginal at p = 1 and carries no interior root
  const auto one = at(1.0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].branch == BranchId{Family::Xi, 1});

  const auto three = at(pi);
  REQUIRE(three.size() == 3);
  CHECK(three.size() == static_cast<std::size_t>(oracle::scan_count(1.0 / pi, 0.001)));
  for (const auto& r : three) {
    CHECK(std::abs(r.residual) < 1e-12);
    CHECK(r.x <= pi * (1 + 1e-15));
  }

  for (double P : {2.0, 5.0, 10.0, 31.4, 100.0}) {
    const auto roots = at(P);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(roots[i].branch.global_index() == static_cast<int>(i) + 1);
      CHECK(roots[i].x < P);
      if (i > 0) CHECK(roots[i].x > roots[i - 1].x);
    }
  }
}

TEST_CASE("matching flag") {
  // zeta_1 between 2/pi and 1 sits where x cot x > 0
  CHECK_FALSE(solve_branch({Family::Zeta, 1}, 0.8).matched);
  CHECK(solve_branch({Family::Zeta, 1}, 0.6).matched);
  CHECK(solve_branch({Family::Xi, 1}, 5.0).matched);
  CHECK_FALSE(solve_branch({Family::Xi, 2}, 0.33).matched);
  CHECK(solve_branch({Family::Xi, 2}, 0.31).matched);
  // at the threshold the root is at x = P
  for (int g = 2; g <= 10; ++g) {
    const BranchId b = BranchId::from_global(g);
    const double pt = matched_threshold(b);
    CHECK(solve_branch(b, pt).x == doctest::Approx(1.0 / pt).epsilon(1e-12));
    CHECK(solve_branch(b, pt * 0.999).matched);
    CHECK_FALSE(solve_branch(b, pt * 1.001).matched);
  }
}
