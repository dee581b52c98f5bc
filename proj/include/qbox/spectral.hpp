#pragma once

#include <map>

#include "qbox/exactalg.hpp"
#include "qbox/polybox.hpp"

namespace qbox {

/// Closed form of c_n = integral_0^1 P(x) sin(n pi x) dx:
///
///   c_n = sum_j (alpha_j + beta_j (-1)^n) / (n pi)^j,   j = 2m + 1 >= 3,
///   alpha_j = (-1)^m P^(2m)(0),  beta_j = -(-1)^m P^(2m)(1).
///
/// These are the surviving rows of tabular integration by parts: the sine
/// rows vanish at both limits and the j = 1 row vanishes with P(0) = P(1) = 0.
struct SineCoefficientForm {
  struct Term {
    Rational alpha;
    Rational beta;
  };
  std::map<int, Term> terms;  // keyed by odd j

  /// c_n for a given n, as an exact multiple of 1/pi^j per j.
  double evaluate(int n) const;
};

/// W(E_n) = sum_q (U_q + V_q (-1)^n) / (n pi)^q with 2/norm_squared folded in.
struct WeightForm {
  struct Term {
    Rational u;
    Rational v;
  };
  std::map<int, Term> terms;  // keyed by even q >= 6

  int min_q() const { return terms.begin()->first; }
  int max_q() const { return terms.rbegin()->first; }
  double evaluate(long n) const;
};

SineCoefficientForm sine_coefficients(const BoxPolynomial& p);
WeightForm weight_form(const BoxPolynomial& p);

/// True iff V_q = -U_q for every q: only odd n contribute.
bool detect_lambda_only(const WeightForm& w);

/// True iff V_q = U_q for every q: only even n contribute.
bool detect_even_only(const WeightForm& w);

struct MomentOptions {
  // Orders k >= 3 are only computed when explicitly acknowledged; the
  // spectral identity is not asserted for them.
  bool allow_high_moments = false;
};

/// sum_n W(E_n) E_n^k with E_n = n^2 pi^2, expressed over normalized unknowns:
///   sum_q U_q X[zeta(q-2k)] - V_q X[eta(q-2k)],
/// or sum_q 2 U_q X[lambda(q-2k)] when the weight is odd-n only.
/// Throws Divergent when q_min - 2k < 2.
LinearForm moment_series(const WeightForm& w, int k, MomentOptions options = {});

}  // namespace qbox
