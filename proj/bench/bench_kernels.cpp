// Serial vs OpenMP term generation for the verification series.
//
//   bench_kernels [terms] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

#include <omp.h>

#include "qbox/kernels.hpp"
#include "qbox/spectral.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    f();
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (dt < best) best = dt;
  }
  return best;
}

void run_case(const char* name, const std::vector<qbox::kernels::PowerTerm>& spec,
              std::int64_t terms, int repeats) {
  std::vector<double> a(static_cast<std::size_t>(terms));
  std::vector<double> b(static_cast<std::size_t>(terms));
  const double ts = best_of(repeats, [&] { qbox::kernels::serial::fill_terms(spec, 1, a); });
  const double tp = best_of(repeats, [&] { qbox::kernels::parallel::fill_terms(spec, 1, b); });
  const bool same = std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
  std::printf("%-28s serial %9.4f s  omp %9.4f s  speedup %5.2fx  identical %s  sum %.17g\n",
              name, ts, tp, ts / tp, same ? "yes" : "NO", qbox::kernels::accumulate(b));
}

}  // namespace

int main(int argc, char** argv) {
  const std::int64_t terms = argc > 1 ? std::atoll(argv[1]) : 10'000'000;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  std::printf("terms %lld, threads %d\n", static_cast<long long>(terms), omp_get_max_threads());

  run_case("zeta(4)", {{4, 1.0, 1.0}}, terms, repeats);
  run_case("eta(16)", {{16, 1.0, -1.0}}, terms, repeats);

  // <H> series of the quartic x^3(1-x): three power laws per term.
  const auto w = qbox::weight_form(qbox::standard_family(4, 2));
  std::vector<qbox::kernels::PowerTerm> spec;
  for (const auto& [q, t] : w.terms) {
    const double u = t.u.to_double();
    const double v = t.v.to_double();
    spec.push_back({q - 2, u - v, u + v});
  }
  run_case("moment1[x^3(1-x)] (unscaled)", spec, terms, repeats);
  return 0;
}
