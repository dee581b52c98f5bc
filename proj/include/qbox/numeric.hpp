#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qbox/deriver.hpp"
#include "qbox/exactalg.hpp"
#include "qbox/polybox.hpp"

namespace qbox {

struct VerificationReport {
  std::string target;
  double closed_value;
  double partial_sum;
  double tail_bound;
  double residual;  // |closed_value - partial_sum|
  bool pass;
};

/// 1e-12 * max(1, |closed_value|): room for rounding in the accumulation.
double float_slack(double closed_value);

struct PartialSum {
  double sum;
  double tail_bound;  // rigorous bound on |true value - sum|
};

/// First `terms` terms of the series, ascending n. For lambda those are the
/// odd n = 1, 3, ..., 2*terms - 1.
PartialSum partial_sum(const SumSymbol& symbol, std::int64_t terms);

std::vector<VerificationReport> verify_table(const ClosedFormTable& table, std::int64_t terms);

/// Sums W(E_n) E_n^k for k in `orders` and compares against the direct
/// quadratic forms (1, <H>, <H^2>). With a table, an exact nonzero residual of
/// the moment equation also fails the report.
std::vector<VerificationReport> verify_state(const BoxPolynomial& p, std::int64_t terms,
                                             const ClosedFormTable* table = nullptr,
                                             const std::set<int>& orders = {0, 1, 2});

/// W(E_n) for n = 1..count in double precision.
std::vector<double> weight_values(const BoxPolynomial& p, std::int64_t count);

}  // namespace qbox
