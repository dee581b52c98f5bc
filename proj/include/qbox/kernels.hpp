#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace qbox::kernels {

/// One power-law component of a series term:
///   coefficient(n) / n^exponent, coefficient chosen by the parity of n.
struct PowerTerm {
  int exponent;
  double odd_coefficient;
  double even_coefficient;
};

/// term(n) = sum over components. Shared by both kernel variants so they
/// produce bit-identical values.
inline double series_term(std::span<const PowerTerm> spec, std::int64_t n) {
  const double nd = static_cast<double>(n);
  const bool even = (n % 2) == 0;
  double total = 0.0;
  for (const auto& t : spec) {
    const double c = even ? t.even_coefficient : t.odd_coefficient;
    if (c != 0.0) total += c / std::pow(nd, t.exponent);
  }
  return total;
}

namespace serial {
/// out[i] = term(first_n + i). Reference implementation.
void fill_terms(std::span<const PowerTerm> spec, std::int64_t first_n, std::span<double> out);
}  // namespace serial

namespace parallel {
/// Same contract as serial::fill_terms, OpenMP static schedule.
void fill_terms(std::span<const PowerTerm> spec, std::int64_t first_n, std::span<double> out);
}  // namespace parallel

/// Neumaier-compensated sum in index order. Always serial: the order of
/// accumulation is part of the reproducibility contract.
double accumulate(std::span<const double> terms);

/// fill_terms + accumulate over n = 1..count.
double sum_series(std::span<const PowerTerm> spec, std::int64_t count, bool use_parallel = true);

}  // namespace qbox::kernels
