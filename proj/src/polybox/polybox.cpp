#include "qbox/polybox.hpp"

#include <cmath>

#include "qbox/errors.hpp"

namespace qbox {

namespace {

const Polynomial& well_factor() {
  // x(1 - x)
  static const Polynomial f({Rational(0), Rational(1), Rational(-1)});
  return f;
}

// R((x - 1/2)^2) with R(u) = u^(m-1) + 1, or 1 when m = 1.
Polynomial centered_profile(int m) {
  if (m == 1) return Polynomial::constant(Rational(1));
  const Polynomial u = Polynomial::linear(Rational(-1, 2), Rational(1)).pow(2);
  return u.pow(m - 1) + Polynomial::constant(Rational(1));
}

int sign_changes(const std::vector<Polynomial>& chain, const Rational& at) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = p(at).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

BoxPolynomial::BoxPolynomial(Polynomial p) : p_(std::move(p)) {
  if (p_.is_zero()) throw ZeroPolynomial();
  const Rational at0 = p_(Rational(0));
  const Rational at1 = p_(Rational(1));
  if (!at0.is_zero() || !at1.is_zero()) {
    throw BoundaryViolation("wave function must vanish at both walls: P(0) = " +
                            at0.to_string() + ", P(1) = " + at1.to_string());
  }
  // A nonzero polynomial with roots at 0 and 1 has degree >= 2.
}

BoxPolynomial make_wavefunction(std::vector<Rational> coefficients) {
  if (coefficients.empty()) throw InvalidArgument("coefficient list is empty");
  return BoxPolynomial(Polynomial(std::move(coefficients)));
}

BoxPolynomial standard_family(int degree, int index) {
  if (degree < 2 || index < 0 || index > degree - 2) {
    throw InvalidDegree("standard_family needs degree >= 2 and 0 <= index <= degree - 2, got (" +
                        std::to_string(degree) + ", " + std::to_string(index) + ")");
  }
  return BoxPolynomial(well_factor() * Polynomial::monomial(index));
}

BoxPolynomial centered_even_family(int half_degree) {
  if (half_degree < 1) throw InvalidDegree("centered_even_family needs m >= 1");
  return BoxPolynomial(well_factor() * centered_profile(half_degree));
}

BoxPolynomial centered_odd_family(int half_degree) {
  if (half_degree < 1) throw InvalidDegree("centered_odd_family needs m >= 1");
  const Polynomial tilt = Polynomial::linear(Rational(1), Rational(-2));
  return BoxPolynomial(well_factor() * tilt * centered_profile(half_degree));
}

Rational norm_squared(const BoxPolynomial& p) { return (p.poly() * p.poly()).integral_unit(); }

Rational quadratic_form_H(const BoxPolynomial& p) {
  const Polynomial d1 = p.poly().derivative();
  const Rational kinetic = (d1 * d1).integral_unit();
  const Rational by_parts = -(p.poly() * p.poly().derivative(2)).integral_unit();
  if (kinetic != by_parts) {
    throw Inconsistent("integration by parts failed: " + kinetic.to_string() + " vs " +
                       by_parts.to_string());
  }
  return kinetic;
}

Rational quadratic_form_H2(const BoxPolynomial& p) {
  const Polynomial d2 = p.poly().derivative(2);
  return (d2 * d2).integral_unit();
}

std::string_view to_string(ShiftedParity parity) {
  switch (parity) {
    case ShiftedParity::even: return "even";
    case ShiftedParity::odd: return "odd";
    case ShiftedParity::none: return "none";
  }
  return "?";
}

ShiftedParity shift_parity(const BoxPolynomial& p) {
  const Polynomial centred = p.poly().shifted(Rational(1, 2));
  bool has_even = false;
  bool has_odd = false;
  for (int i = 0; i <= centred.degree(); ++i) {
    if (centred.coefficient(i).is_zero()) continue;
    (i % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_even && !has_odd) return ShiftedParity::even;
  if (has_odd && !has_even) return ShiftedParity::odd;
  return ShiftedParity::none;
}

int node_count(const BoxPolynomial& p) {
  // Strip the wall roots so neither endpoint is a root of the chain head.
  Polynomial q = p.poly();
  const Polynomial x = Polynomial::monomial(1);
  const Polynomial x_minus_1 = Polynomial::linear(Rational(-1), Rational(1));
  while (q(Rational(0)).is_zero()) q = q.divmod(x).first;
  while (q(Rational(1)).is_zero()) q = q.divmod(x_minus_1).first;
  if (q.degree() < 1) return 0;

  std::vector<Polynomial> chain{q, q.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    Polynomial r = -a.divmod(b).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return sign_changes(chain, Rational(0)) - sign_changes(chain, Rational(1));
}

std::vector<SamplePoint> sample(const BoxPolynomial& p, int count) {
  if (count < 2) throw InvalidArgument("sample needs at least 2 points");
  const double scale = 1.0 / std::sqrt(norm_squared(p).to_double());
  std::vector<SamplePoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Rational x(i, count - 1);
    const double value = p.poly()(x).to_double() * scale;
    out.push_back({std::move(x), value});
  }
  return out;
}

}  // namespace qbox
