#pragma once

// Test-only reference routes. Nothing here shares code with the paths it checks
// beyond the Rational and Polynomial value types.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qbox/polybox.hpp"
#include "qbox/rational.hpp"

namespace oracle {

/// Composite 10-point Gauss-Legendre quadrature of P(x) sin(n pi x) on [0, 1].
inline long double sine_integral(const qbox::Polynomial& p, int n, int panels = 64) {
  static constexpr long double nodes[5] = {
      0.1488743389816312108848260011297200L, 0.4333953941292471907992659431657842L,
      0.6794095682990244062343273651148736L, 0.8650633666889845107320966884234930L,
      0.9739065285171717200779640120844521L};
  static constexpr long double weights[5] = {
      0.2955242247147528701738929946513383L, 0.2692667193099963550912269215694694L,
      0.2190863625159820439955349342281632L, 0.1494513491505805931457763396576973L,
      0.0666713443086881375935688098933317L};
  std::vector<long double> c;
  for (const auto& r : p.coefficients()) c.push_back(static_cast<long double>(r.to_double()));
  auto f = [&](long double x) {
    long double v = 0.0L;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v * std::sin(static_cast<long double>(n) * std::numbers::pi_v<long double> * x);
  };
  const long double h = 1.0L / panels;
  long double total = 0.0L;
  for (int k = 0; k < panels; ++k) {
    const long double mid = (k + 0.5L) * h;
    const long double half = 0.5L * h;
    for (int i = 0; i < 5; ++i) {
      total += weights[i] * half * (f(mid - half * nodes[i]) + f(mid + half * nodes[i]));
    }
  }
  return total;
}

/// Bernoulli numbers B_0..B_m by the Akiyama-Tanigawa algorithm (B_1 = +1/2).
inline std::vector<qbox::Rational> bernoulli(int m) {
  std::vector<qbox::Rational> out;
  std::vector<qbox::Rational> a(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    a[static_cast<std::size_t>(k)] = qbox::Rational(1, k + 1);
    for (int j = k; j >= 1; --j) {
      a[static_cast<std::size_t>(j - 1)] =
          qbox::Rational(j) * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    }
    out.push_back(a[0]);
  }
  return out;
}

/// zeta(2k) / pi^(2k) = (-1)^(k+1) B_2k 2^(2k-1) / (2k)!.
inline qbox::Rational zeta_over_pi_power(int p) {
  const auto b = bernoulli(p);
  qbox::Rational fact(1);
  for (int i = 2; i <= p; ++i) fact *= qbox::Rational(i);
  const qbox::Rational sign = ((p / 2) % 2 == 1) ? qbox::Rational(1) : qbox::Rational(-1);
  return sign * b[static_cast<std::size_t>(p)] * qbox::Rational(2).pow(p - 1) / fact;
}

/// Brute-force direct sum in long double, descending n for accuracy.
inline long double direct_sum(int kind /*0 zeta, 1 eta, 2 lambda*/, int p, std::int64_t terms) {
  long double s = 0.0L;
  for (std::int64_t n = terms; n >= 1; --n) {
    const long double t = 1.0L / std::pow(static_cast<long double>(n), p);
    if (kind == 0) s += t;
    if (kind == 1) s += (n % 2 == 1) ? t : -t;
    if (kind == 2 && n % 2 == 1) s += t;
  }
  return s;
}

/// Random state x(1-x) Q(x), deg Q <= max_q_degree, small random rationals.
inline qbox::BoxPolynomial random_state(std::mt19937_64& rng, int max_q_degree) {
  std::uniform_int_distribution<int> deg(0, max_q_degree);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  for (;;) {
    const int d = deg(rng);
    std::vector<qbox::Rational> q;
    for (int i = 0; i <= d; ++i) q.emplace_back(num(rng), den(rng));
    qbox::Polynomial poly(std::move(q));
    if (poly.is_zero()) continue;
    poly *= qbox::Polynomial({qbox::Rational(0), qbox::Rational(1), qbox::Rational(-1)});
    return qbox::BoxPolynomial(std::move(poly));
  }
}

// x(1-x) S((x-1/2)^2), optionally times (1-2x), with random S.
inline qbox::BoxPolynomial random_centred(std::mt19937_64& rng, bool odd, int max_s_degree) {
  std::uniform_int_distribution<int> deg(0, max_s_degree);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  const qbox::Polynomial u = qbox::Polynomial::linear(qbox::Rational(-1, 2), 1).pow(2);
  for (;;) {
    qbox::Polynomial s;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) s += u.pow(i) * qbox::Rational(num(rng), den(rng));
    if (s.is_zero()) continue;
    qbox::Polynomial p = qbox::Polynomial({0, 1, -1}) * s;
    if (odd) p *= qbox::Polynomial::linear(1, -2);
    return qbox::BoxPolynomial(p);
  }
}

}  // namespace oracle
