#include "sqwell/rational_poly.hpp"

#include <stdexcept>
#include <utility>

namespace sqwell {

Rational parse_rational(const std::string& text) {
  Rational value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

RationalPoly::RationalPoly(std::initializer_list<Rational> coefficients)
    : coeffs_(coefficients) {
  trim();
}

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

RationalPoly RationalPoly::constant(const Rational& value) { return RationalPoly({value}); }

RationalPoly RationalPoly::monomial(const Rational& value, int power) {
  std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
  c.back() = value;
  return RationalPoly(std::move(c));
}

Rational RationalPoly::coefficient(int power) const {
  if (power < 0 || power > degree()) {
    return Rational(0);
  }
  return coeffs_[static_cast<std::size_t>(power)];
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& factor) {
  for (auto& c : coeffs_) {
    c *= factor;
  }
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& lhs, const RationalPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) {
    return {};
  }
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return RationalPoly(std::move(out));
}

bool operator==(const RationalPoly& lhs, const RationalPoly& rhs) {
  return lhs.coeffs_ == rhs.coeffs_;
}

RationalPoly RationalPoly::divided_by_variable() const {
  if (is_zero()) {
    return {};
  }
  if (sgn(coeffs_.front()) != 0) {
    throw std::logic_error("polynomial has a nonzero constant term");
  }
  return RationalPoly(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

double RationalPoly::evaluate(double b) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * b + it->get_d();
  }
  return acc;
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
    coeffs_.pop_back();
  }
}

}  // namespace sqwell
