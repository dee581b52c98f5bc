#include <cmath>

#include "qbox/kernels.hpp"

namespace qbox::kernels {

namespace serial {

void fill_terms(std::span<const PowerTerm> spec, std::int64_t first_n, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = series_term(spec, first_n + static_cast<std::int64_t>(i));
  }
}

}  // namespace serial

double accumulate(std::span<const double> terms) {
  double sum = 0.0;
  double carry = 0.0;
  for (const double t : terms) {
    const double next = sum + t;
    if (std::fabs(sum) >= std::fabs(t)) {
      carry += (sum - next) + t;
    } else {
      carry += (t - next) + sum;
    }
    sum = next;
  }
  return sum + carry;
}

double sum_series(std::span<const PowerTerm> spec, std::int64_t count, bool use_parallel) {
  std::vector<double> terms(static_cast<std::size_t>(count));
  if (use_parallel) {
    parallel::fill_terms(spec, 1, terms);
  } else {
    serial::fill_terms(spec, 1, terms);
  }
  return accumulate(terms);
}

}  // namespace qbox::kernels
