#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace sqwell {

/// Exact rational with unbounded numerator and denominator; GMP keeps it in
/// lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses "num/den" or "num".
Rational parse_rational(const std::string& text);

/// "num/den" with the denominator always written.
std::string format_rational(const Rational& value);

/// Dense polynomial in one variable with exact rational coefficients, constant
/// term first. Trailing zero coefficients are never stored; the zero
/// polynomial has no coefficients and degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(std::initializer_list<Rational> coefficients);
  explicit RationalPoly(std::vector<Rational> coefficients);

  static RationalPoly constant(const Rational& value);
  /// The monomial value * b^power.
  static RationalPoly monomial(const Rational& value, int power);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of b^power; zero outside the stored range.
  Rational coefficient(int power) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  RationalPoly& operator+=(const RationalPoly& other);
  RationalPoly& operator-=(const RationalPoly& other);
  RationalPoly& operator*=(const Rational& factor);

  friend RationalPoly operator+(RationalPoly lhs, const RationalPoly& rhs) { return lhs += rhs; }
  friend RationalPoly operator-(RationalPoly lhs, const RationalPoly& rhs) { return lhs -= rhs; }
  friend RationalPoly operator*(RationalPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend RationalPoly operator*(const RationalPoly& lhs, const RationalPoly& rhs);
  friend bool operator==(const RationalPoly& lhs, const RationalPoly& rhs);

  /// Exact division by b; requires a zero constant term.
  RationalPoly divided_by_variable() const;

  /// Horner evaluation in floating point after rounding each coefficient.
  double evaluate(double b) const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace sqwell
