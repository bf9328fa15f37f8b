#include "sqwell/reference.hpp"

#include <utility>

namespace sqwell::printed {

namespace {

using Term = std::pair<long long, long long>;

// Magnitudes of the even-power coefficients b^0, b^2, ...; the overall sign is
// (-1)^m as printed.
const std::vector<std::vector<Term>>& magnitudes() {
  static const std::vector<std::vector<Term>> table = {
      {{1, 1}},
      {{1, 1}},
      {{1, 1}},
      {{1, 1}, {1, 6}},
      {{1, 1}, {2, 3}},
      {{1, 1}, {5, 3}, {3, 2 * 2 * 2 * 5}},
      {{1, 1}, {2 * 5, 3}, {2 * 2 * 2, 3 * 5}},
      {{1, 1}, {5 * 7, 2 * 3}, {7 * 37, 8 * 3 * 5}, {5, 128 * 7}},
      {{1, 1}, {4 * 7, 3}, {2 * 49, 15}, {16, 35}},
      {{1, 1}, {14, 1}, {7 * 47, 4 * 5}, {3229, 4 * 9 * 5 * 7}, {35, 128 * 9}},
      {{1, 1}, {20, 1}, {2 * 7 * 13, 5}, {16 * 41, 9 * 7}, {128, 9 * 5 * 7}},
      {{1, 1}, {55, 2}, {7 * 11 * 19, 20}, {11 * 1571, 8 * 9 * 7},
       {11 * 59 * 181, 128 * 9 * 5 * 7}, {9 * 7, 256 * 11}},
      {{1, 1}, {110, 3}, {2 * 11 * 31, 5}, {4 * 11 * 139, 63}, {8 * 11 * 479, 81 * 35},
       {256, 9 * 7 * 11}},
      {{1, 1}, {143, 3}, {11 * 13 * 67, 32 * 5}, {11 * 13 * 17 * 127, 4 * 9 * 35},
       {11LL * 13 * 23 * 6679, 128 * 81 * 35}, {13LL * 211 * 2609, 128LL * 9 * 25 * 7 * 11},
       {3 * 7 * 11, 1024 * 13}},
      {{1, 1}, {2 * 7 * 13, 3}, {2 * 7 * 11 * 13, 5}, {4 * 11 * 13 * 311, 9 * 35},
       {16 * 11 * 13 * 37, 81 * 5}, {64 * 13 * 59, 9 * 25 * 11}, {1024, 3 * 7 * 11 * 13}},
      {{1, 1}, {5 * 7 * 13, 6}, {49 * 121 * 13, 8 * 3 * 5}, {11 * 13 * 8521, 16 * 9 * 7},
       {11LL * 13 * 79 * 2917, 128 * 81 * 5}, {7LL * 13 * 1206053, 256LL * 81 * 5 * 11},
       {17911LL * 135721, 1024LL * 27 * 25 * 7 * 11 * 13}, {11 * 13, 2048 * 5}},
      {{1, 1}, {8 * 5 * 7, 3}, {4 * 7 * 13 * 41, 15}, {16 * 11 * 13 * 67, 9 * 35},
       {2 * 11 * 13 * 2473, 81 * 5}, {32 * 13 * 4201, 81 * 55},
       {64LL * 266681, 27LL * 25 * 7 * 11 * 13}, {2048, 9 * 5 * 11 * 13}},
  };
  return table;
}

}  // namespace

std::optional<RationalPoly> q_polynomial(int m) {
  if (m < 0 || m > max_published_order) {
    return std::nullopt;
  }
  const auto& terms = magnitudes()[static_cast<std::size_t>(m)];
  std::vector<Rational> c(2 * terms.size() - 1);
  const int sign = m % 2 == 0 ? 1 : -1;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Rational v(mpz_class(static_cast<long>(terms[i].first)),
               mpz_class(static_cast<long>(terms[i].second)));
    v.canonicalize();
    c[2 * i] = sign * v;
  }
  return RationalPoly(std::move(c));
}

const std::vector<CubicDisplay>& cubic_displays() {
  static const std::vector<CubicDisplay> table = {
      {"A1", {Family::Xi, 2}, 4.2409, 2.8851, 0.4728, 4.3767, false},
      {"A2", {Family::Xi, 3}, 7.6132, 2.9840, 0.2300, 7.6906, false},
      {"A3", {Family::Xi, 4}, 10.8580, 3.0803, 0.1336, 10.6235, false},
      {"A4", {Family::Xi, 5}, 14.0607, 3.1484, 0.0729, 13.439, false},
      {"A5", {Family::Zeta, 2}, 5.9562, 2.9256, 0.3297, 6.121, false},
      {"A6", {Family::Zeta, 3}, 9.24337, 3.03623, 0.17839, 9.1793, false},
      {"A7", {Family::Zeta, 4}, 12.4627, 3.1173, 0.0996, 12.0402, false},
      {"A8", {Family::Zeta, 5}, 15.6911, 3.2908, 0.01538, 14.3186, true},
  };
  return table;
}

}  // namespace sqwell::printed
