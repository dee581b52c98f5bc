#include "qbox/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "qbox/errors.hpp"
#include "qbox/kernels.hpp"
#include "qbox/render.hpp"
#include "qbox/spectral.hpp"

namespace qbox {

namespace {

VerificationReport make_report(std::string target, double closed, double partial, double tail) {
  const double residual = std::fabs(closed - partial);
  return {std::move(target), closed, partial, tail, residual,
          residual <= tail + float_slack(closed)};
}

// Series of W(E_n) E_n^k = sum_q (U_q + V_q (-1)^n) pi^(2k-q) / n^(q-2k).
std::vector<kernels::PowerTerm> moment_terms(const WeightForm& w, int k) {
  std::vector<kernels::PowerTerm> spec;
  for (const auto& [q, t] : w.terms) {
    const double scale = pi_power(2 * k - q);
    const double u = t.u.to_double();
    const double v = t.v.to_double();
    spec.push_back({q - 2 * k, (u - v) * scale, (u + v) * scale});
  }
  return spec;
}

// sum_{n > N} |term(n)| <= sum_q c_q * N^(1-e) / (e-1) by the integral test.
double moment_tail(std::span<const kernels::PowerTerm> spec, std::int64_t terms) {
  const double n = static_cast<double>(terms);
  double bound = 0.0;
  for (const auto& t : spec) {
    const double c = std::max(std::fabs(t.odd_coefficient), std::fabs(t.even_coefficient));
    bound += c * std::pow(n, 1 - t.exponent) / (t.exponent - 1);
  }
  return bound;
}

}  // namespace

double float_slack(double closed_value) { return 1e-12 * std::max(1.0, std::fabs(closed_value)); }

PartialSum partial_sum(const SumSymbol& symbol, std::int64_t terms) {
  if (terms < 2) throw InvalidArgument("partial_sum needs at least 2 terms");
  const int p = symbol.argument();
  const double n = static_cast<double>(terms);
  switch (symbol.kind()) {
    case SumKind::zeta: {
      const kernels::PowerTerm spec[] = {{p, 1.0, 1.0}};
      return {kernels::sum_series(spec, terms), std::pow(n, 1 - p) / (p - 1)};
    }
    case SumKind::eta: {
      const kernels::PowerTerm spec[] = {{p, 1.0, -1.0}};
      return {kernels::sum_series(spec, terms), std::pow(n + 1, -p)};
    }
    case SumKind::lambda: {
      const kernels::PowerTerm spec[] = {{p, 1.0, 0.0}};
      return {kernels::sum_series(spec, 2 * terms - 1),
              std::pow(2 * n - 1, 1 - p) / (2.0 * (p - 1))};
    }
  }
  throw InvalidArgument("unknown sum kind");
}

std::vector<VerificationReport> verify_table(const ClosedFormTable& table, std::int64_t terms) {
  if (table.empty()) throw InvalidArgument("cannot verify an empty table");
  std::vector<VerificationReport> out;
  for (const auto& [s, e] : table.entries()) {
    const PartialSum ps = partial_sum(s, terms);
    out.push_back(make_report(s.to_string(), to_double(e.value), ps.sum, ps.tail_bound));
  }
  return out;
}

std::vector<VerificationReport> verify_state(const BoxPolynomial& p, std::int64_t terms,
                                             const ClosedFormTable* table,
                                             const std::set<int>& orders) {
  if (terms < 2) throw InvalidArgument("verify_state needs at least 2 terms");
  const WeightForm w = weight_form(p);
  const auto known = table ? table->normalized() : std::map<SumSymbol, Rational>{};
  std::vector<VerificationReport> out;
  for (const int k : orders) {
    if (w.min_q() - 2 * k < 2) {
      throw Divergent("moment " + std::to_string(k) + " of " + p.to_string() + " diverges");
    }
    const auto spec = moment_terms(w, k);
    const double closed = direct_moment(p, k).to_double();
    auto report = make_report("moment" + std::to_string(k) + "[" + p.to_string() + "]", closed,
                              kernels::sum_series(spec, terms), moment_tail(spec, terms));
    if (table) {
      const auto value = moment_series(w, k).evaluate(known);
      if (value && *value != direct_moment(p, k)) report.pass = false;
    }
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<double> weight_values(const BoxPolynomial& p, std::int64_t count) {
  const WeightForm w = weight_form(p);
  const auto spec = moment_terms(w, 0);
  std::vector<double> out(static_cast<std::size_t>(count));
  kernels::parallel::fill_terms(spec, 1, out);
  return out;
}

}  // namespace qbox
