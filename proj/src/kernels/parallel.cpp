#include "qbox/kernels.hpp"

namespace qbox::kernels::parallel {

void fill_terms(std::span<const PowerTerm> spec, std::int64_t first_n, std::span<double> out) {
  const auto count = static_cast<std::int64_t>(out.size());
  double* dst = out.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    dst[i] = series_term(spec, first_n + i);
  }
}

}  // namespace qbox::kernels::parallel
