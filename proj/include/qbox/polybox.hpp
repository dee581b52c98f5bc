#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbox/rational.hpp"

namespace qbox {

/// Dense polynomial with exact coefficients, index = power of x. Trailing
/// zeros are trimmed so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial monomial(int power, Rational coefficient = Rational(1));
  static Polynomial constant(Rational c) { return monomial(0, std::move(c)); }
  /// a + b*x
  static Polynomial linear(Rational a, Rational b);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int power) const;
  Rational leading() const { return is_zero() ? Rational{} : coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  Polynomial derivative(int order = 1) const;
  /// P(x + shift)
  Polynomial shifted(const Rational& shift) const;
  /// Exact integral over [0, 1].
  Rational integral_unit() const;
  Polynomial pow(int exponent) const;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& k);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
  Polynomial operator-() const { return *this * Rational(-1); }

  /// "x - x^2", "1/2*x^3 + 2".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// A state in the unit well: a polynomial of degree >= 2 vanishing at x = 0
/// and x = 1. Kept unnormalized; physical quantities divide by norm_squared.
class BoxPolynomial {
 public:
  /// Throws ZeroPolynomial or BoundaryViolation.
  explicit BoxPolynomial(Polynomial p);

  const Polynomial& poly() const { return p_; }
  int degree() const { return p_.degree(); }
  std::string to_string() const { return p_.to_string(); }

  friend bool operator==(const BoxPolynomial&, const BoxPolynomial&) = default;

 private:
  Polynomial p_;
};

BoxPolynomial make_wavefunction(std::vector<Rational> coefficients);

/// x^(j+1) (1 - x), the j-th member of the degree-d basis; j in [0, d-2].
BoxPolynomial standard_family(int degree, int index);

/// x(1-x) R((x-1/2)^2) with R(u) = u^(m-1) + 1 (R = 1 for m = 1); degree 2m,
/// even about the well centre.
BoxPolynomial centered_even_family(int half_degree);

/// x(1-x)(1-2x) R((x-1/2)^2) with the same R; degree 2m+1, odd about the
/// well centre.
BoxPolynomial centered_odd_family(int half_degree);

/// Integral of P^2 over the well.
Rational norm_squared(const BoxPolynomial& p);

/// Integral of (P')^2, the kinetic quadratic form in units where H = -d^2/dx^2.
/// Cross-checked against -integral(P P'') on every call.
Rational quadratic_form_H(const BoxPolynomial& p);

/// Integral of (P'')^2, i.e. (H psi, H psi) for the unnormalized state.
Rational quadratic_form_H2(const BoxPolynomial& p);

enum class ShiftedParity { even, odd, none };
std::string_view to_string(ShiftedParity parity);

/// Parity of P(x + 1/2), the state seen from the well centre.
ShiftedParity shift_parity(const BoxPolynomial& p);

/// Distinct real roots strictly inside (0, 1), counted with a Sturm chain.
int node_count(const BoxPolynomial& p);

struct SamplePoint {
  Rational x;
  double psi;  // normalized wave function value
};

/// Normalized psi at `count` equally spaced points of [0, 1], endpoints included.
std::vector<SamplePoint> sample(const BoxPolynomial& p, int count);

/// Accepts either ascending comma-separated coefficients ("0,1,-1") or an
/// expression in x ("x*(1-x)*(1-2*x)", "x^3*(1-x)", "x(1-x)(1/2+x)(3/2-x)").
Polynomial parse_polynomial(std::string_view text);
BoxPolynomial parse_wavefunction(std::string_view text);

}  // namespace qbox
