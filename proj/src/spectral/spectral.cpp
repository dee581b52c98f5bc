#include "qbox/spectral.hpp"

#include <cmath>
#include <numbers>

#include "qbox/errors.hpp"

namespace qbox {

namespace {

long double inverse_power(long double base, int exponent) {
  long double r = 1.0L;
  for (int i = 0; i < exponent; ++i) r /= base;
  return r;
}

}  // namespace

double SineCoefficientForm::evaluate(int n) const {
  const long double npi = static_cast<long double>(n) * std::numbers::pi_v<long double>;
  const long double sign = (n % 2 == 0) ? 1.0L : -1.0L;
  long double total = 0.0L;
  for (const auto& [j, t] : terms) {
    const long double a = t.alpha.to_double();
    const long double b = t.beta.to_double();
    total += (a + b * sign) * inverse_power(npi, j);
  }
  return static_cast<double>(total);
}

double WeightForm::evaluate(long n) const {
  const long double npi = static_cast<long double>(n) * std::numbers::pi_v<long double>;
  const long double sign = (n % 2 == 0) ? 1.0L : -1.0L;
  long double total = 0.0L;
  for (const auto& [q, t] : terms) {
    total += (t.u.to_double() + t.v.to_double() * sign) * inverse_power(npi, q);
  }
  return static_cast<double>(total);
}

SineCoefficientForm sine_coefficients(const BoxPolynomial& p) {
  SineCoefficientForm form;
  Polynomial deriv = p.poly().derivative(2);
  for (int m = 1; 2 * m <= p.degree(); ++m) {
    const Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
    Rational alpha = sign * deriv(Rational(0));
    Rational beta = -sign * deriv(Rational(1));
    if (!alpha.is_zero() || !beta.is_zero()) {
      form.terms.emplace(2 * m + 1, SineCoefficientForm::Term{std::move(alpha), std::move(beta)});
    }
    deriv = deriv.derivative(2);
  }
  return form;
}

WeightForm weight_form(const BoxPolynomial& p) {
  const SineCoefficientForm c = sine_coefficients(p);
  WeightForm w;
  // (-1)^(2n) = 1 collapses the square into an even/odd-in-n pair per q.
  for (const auto& [j, a] : c.terms) {
    for (const auto& [k, b] : c.terms) {
      auto& slot = w.terms[j + k];
      slot.u += a.alpha * b.alpha + a.beta * b.beta;
      slot.v += a.alpha * b.beta + b.alpha * a.beta;
    }
  }
  const Rational scale = Rational(2) / norm_squared(p);
  for (auto it = w.terms.begin(); it != w.terms.end();) {
    it->second.u *= scale;
    it->second.v *= scale;
    if (it->second.u.is_zero() && it->second.v.is_zero()) {
      it = w.terms.erase(it);
    } else {
      ++it;
    }
  }
  return w;
}

bool detect_lambda_only(const WeightForm& w) {
  for (const auto& [q, t] : w.terms) {
    if (t.v != -t.u) return false;
  }
  return true;
}

bool detect_even_only(const WeightForm& w) {
  for (const auto& [q, t] : w.terms) {
    if (t.v != t.u) return false;
  }
  return true;
}

LinearForm moment_series(const WeightForm& w, int k, MomentOptions options) {
  if (k < 0) throw InvalidArgument("moment order must be non-negative");
  if (k > 2 && !options.allow_high_moments) {
    throw InvalidArgument("moment order " + std::to_string(k) +
                          " requires allow_high_moments");
  }
  if (w.terms.empty()) throw InvalidArgument("empty weight form");
  if (w.min_q() - 2 * k < 2) {
    throw Divergent("moment " + std::to_string(k) + " diverges: weights decay as n^-" +
                    std::to_string(w.min_q()));
  }

  LinearForm form;
  const bool odd_only = detect_lambda_only(w);
  for (const auto& [q, t] : w.terms) {
    const int p = q - 2 * k;
    if (odd_only) {
      form.add(SumSymbol(SumKind::lambda, p), Rational(2) * t.u);
    } else {
      // sum (-1)^n / n^p = -eta(p)
      form.add(SumSymbol(SumKind::zeta, p), t.u);
      form.add(SumSymbol(SumKind::eta, p), -t.v);
    }
  }
  return form;
}

}  // namespace qbox
