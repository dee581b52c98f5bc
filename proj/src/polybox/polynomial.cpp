#include <sstream>

#include "qbox/errors.hpp"
#include "qbox/polybox.hpp"

namespace qbox {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(int power, Rational coefficient) {
  std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
  c.back() = std::move(coefficient);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::linear(Rational a, Rational b) {
  return Polynomial({std::move(a), std::move(b)});
}

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rational{};
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative(int order) const {
  std::vector<Rational> c = coeffs_;
  for (int k = 0; k < order && !c.empty(); ++k) {
    std::vector<Rational> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
      d[i - 1] = c[i] * Rational(static_cast<std::int64_t>(i));
    }
    c = std::move(d);
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::shifted(const Rational& shift) const {
  // Horner in the polynomial ring: ((a_n)(x+s) + a_{n-1})(x+s) + ...
  const Polynomial step = linear(shift, Rational(1));
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= step;
    acc += constant(*it);
  }
  return acc;
}

Rational Polynomial::integral_unit() const {
  Rational total;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    total += coeffs_[i] / Rational(static_cast<std::int64_t>(i + 1));
  }
  return total;
}

Polynomial Polynomial::pow(int exponent) const {
  Polynomial acc = constant(Rational(1));
  for (int i = 0; i < exponent; ++i) acc *= *this;
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  const int qd = degree() - dd;
  std::vector<Rational> quot(qd >= 0 ? static_cast<std::size_t>(qd) + 1 : 0);
  const Rational lead_inv = divisor.leading().inverse();
  for (int k = qd; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int i = 0; i <= dd; ++i) {
      rem[static_cast<std::size_t>(k + i)] -= q * divisor.coeffs_[static_cast<std::size_t>(i)];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& k) {
  for (auto& c : coeffs_) c *= k;
  trim();
  return *this;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    const Rational mag = c.abs();
    if (i == 0) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace qbox
