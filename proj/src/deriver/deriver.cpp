#include "qbox/deriver.hpp"

#include <algorithm>

#include "qbox/errors.hpp"

namespace qbox {

namespace {

SumSymbol zeta(int p) { return {SumKind::zeta, p}; }
SumSymbol eta(int p) { return {SumKind::eta, p}; }
SumSymbol lambda(int p) { return {SumKind::lambda, p}; }

// 1 - 2^(1-p), the eta/zeta ratio.
Rational eta_ratio(int p) { return Rational(1) - Rational(2).pow(1 - p); }

// eta(p) - (1 - 2^(1-p)) zeta(p) = 0 and zeta(p) + eta(p) - 2 lambda(p) = 0
// for every argument touched by the system.
std::vector<LinearEquation> relation_rows(const std::set<int>& arguments) {
  std::vector<LinearEquation> rows;
  for (const int p : arguments) {
    LinearForm ratio;
    ratio.add(eta(p), Rational(1));
    ratio.add(zeta(p), -eta_ratio(p));
    rows.push_back({std::move(ratio), Rational(0)});

    LinearForm mean;
    mean.add(zeta(p), Rational(1));
    mean.add(eta(p), Rational(1));
    mean.add(lambda(p), Rational(-2));
    rows.push_back({std::move(mean), Rational(0)});
  }
  return rows;
}

// Solves the accumulated moment equations, optionally a second time with the
// analytic relations appended, and remembers which symbols needed them.
class StagedSolver {
 public:
  explicit StagedSolver(bool use_relations) : use_relations_(use_relations) {}

  void add(const MomentEquation& eq) {
    for (const auto& [s, c] : eq.lhs.terms()) arguments_.insert(s.argument());
    system_.push_back(eq.as_linear());
  }

  void solve(const std::set<int>& extra_arguments) {
    plain_ = solve_exact(system_);
    if (!use_relations_) {
      augmented_ = plain_;
      return;
    }
    std::set<int> args = arguments_;
    args.insert(extra_arguments.begin(), extra_arguments.end());
    std::vector<LinearEquation> sys = system_;
    for (auto& row : relation_rows(args)) sys.push_back(std::move(row));
    augmented_ = solve_exact(sys);
  }

  std::optional<Rational> plain(const SumSymbol& s) const { return lookup(plain_, s); }
  std::optional<Rational> augmented(const SumSymbol& s) const { return lookup(augmented_, s); }

  bool all_resolved(const std::vector<int>& arguments) const {
    return std::all_of(arguments.begin(), arguments.end(), [&](int p) {
      return augmented(zeta(p)) && augmented(eta(p));
    });
  }

  /// zeta, eta and lambda for each argument. Throws Underdetermined or
  /// Inconsistent.
  ClosedFormTable table(const std::vector<int>& arguments) const {
    ClosedFormTable out;
    std::vector<std::string> missing;
    for (const int p : arguments) {
      const auto z = augmented(zeta(p));
      const auto e = augmented(eta(p));
      if (!z || !e) {
        if (!z) missing.push_back(zeta(p).to_string());
        if (!e) missing.push_back(eta(p).to_string());
        continue;
      }
      const bool z_rel = !plain(zeta(p));
      const bool e_rel = !plain(eta(p));
      out.set(zeta(p), *z, z_rel);
      out.set(eta(p), *e, e_rel);

      const Rational mean = (*z + *e) / Rational(2);
      const auto direct = plain(lambda(p));
      if (direct && *direct != mean) {
        throw Inconsistent("lambda(" + std::to_string(p) + ") solved as " + direct->to_string() +
                           " but (zeta + eta)/2 = " + mean.to_string());
      }
      out.set(lambda(p), mean, !direct && (z_rel || e_rel));
    }
    if (!missing.empty()) {
      std::string list;
      for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
      throw Underdetermined("unresolved: " + list);
    }
    return out;
  }

 private:
  static std::optional<Rational> lookup(const SolveResult& r, const SumSymbol& s) {
    const auto it = r.resolved.find(s);
    if (it == r.resolved.end()) return std::nullopt;
    return it->second;
  }

  bool use_relations_;
  std::vector<LinearEquation> system_;
  std::set<int> arguments_;
  SolveResult plain_;
  SolveResult augmented_;
};

std::vector<int> even_range(int from, int to) {
  std::vector<int> out;
  for (int p = from; p <= to; p += 2) out.push_back(p);
  return out;
}

}  // namespace

Rational direct_moment(const BoxPolynomial& p, int k) {
  switch (k) {
    case 0: return Rational(1);
    case 1: return quadratic_form_H(p) / norm_squared(p);
    case 2: return quadratic_form_H2(p) / norm_squared(p);
    default:
      throw InvalidArgument("no direct quadratic form for moment order " + std::to_string(k));
  }
}

MomentEquation build_equation(const BoxPolynomial& p, int k, MomentOptions options) {
  return {moment_series(weight_form(p), k, options), direct_moment(p, k), p.to_string(), k};
}

void ClosedFormTable::set(const SumSymbol& s, const Rational& normalized, bool relation_derived) {
  entries_.insert_or_assign(s, ClosedFormEntry{PiScaled(normalized, s.argument()), relation_derived});
}

const ClosedFormEntry* ClosedFormTable::find(const SumSymbol& s) const {
  const auto it = entries_.find(s);
  return it == entries_.end() ? nullptr : &it->second;
}

std::map<SumSymbol, Rational> ClosedFormTable::normalized() const {
  std::map<SumSymbol, Rational> out;
  for (const auto& [s, e] : entries_) out.emplace(s, e.value.coefficient());
  return out;
}

ClosedFormTable ClosedFormTable::restricted(const std::vector<int>& arguments) const {
  ClosedFormTable out;
  for (const auto& [s, e] : entries_) {
    if (std::find(arguments.begin(), arguments.end(), s.argument()) != arguments.end()) {
      out.entries_.emplace(s, e);
    }
  }
  return out;
}

std::vector<BoxPolynomial> generation_step(int degree) {
  if (degree < 2) throw InvalidDegree("generation starts at degree 2");
  std::vector<BoxPolynomial> out{standard_family(degree, degree - 2)};
  if (degree % 2 == 0) {
    if (degree >= 4) out.push_back(centered_even_family(degree / 2));
  } else {
    out.push_back(centered_odd_family((degree - 1) / 2));
  }
  return out;
}

ClosedFormTable derive(int max_p, const DeriveOptions& options) {
  if (max_p < 2 || max_p % 2 != 0) {
    throw InvalidArgument("max_p must be even and >= 2, got " + std::to_string(max_p));
  }
  const bool with_p2 = options.moment_orders.count(2) != 0;
  if (max_p == 2 && !with_p2) {
    throw InvalidArgument("p = 2 is only reachable through the k = 2 moment");
  }
  for (const int k : options.moment_orders) {
    if (k < 0 || (k > 2 && !options.allow_high_moments)) {
      throw InvalidArgument("unsupported moment order " + std::to_string(k));
    }
  }

  const std::vector<int> targets = even_range(with_p2 ? 2 : 4, max_p);
  const std::set<int> target_set(targets.begin(), targets.end());
  const MomentOptions mopts{options.allow_high_moments};

  StagedSolver solver(options.use_relations);
  const int degree_bound = max_p + 2;
  for (int d = 2; d <= degree_bound; ++d) {
    for (const auto& state : generation_step(d)) {
      for (const int k : options.moment_orders) {
        try {
          solver.add(build_equation(state, k, mopts));
        } catch (const Divergent&) {
          // only reachable for k >= 3 on low-contact states
        }
      }
    }
    solver.solve(target_set);
    if (solver.all_resolved(targets)) return solver.table(targets);
  }
  return solver.table(targets);  // throws Underdetermined
}

DegreeClassification classify(int degree) {
  if (degree < 2) throw InvalidDegree("classify needs degree >= 2, got " + std::to_string(degree));
  const int top = degree % 2 == 0 ? 2 * degree : 2 * degree - 2;
  return {degree, even_range(4, top)};
}

std::vector<TableRow> reproduce_table(int max_degree) {
  if (max_degree < 2) throw InvalidDegree("max_degree must be >= 2");
  std::vector<TableRow> rows;
  StagedSolver solver(/*use_relations=*/true);
  for (int d = 2; d <= max_degree; ++d) {
    for (const auto& state : generation_step(d)) {
      for (const int k : {1, 2}) solver.add(build_equation(state, k));
    }
    const auto cls = classify(d);
    solver.solve({cls.attainable_p.begin(), cls.attainable_p.end()});
    rows.push_back({d, cls.attainable_p, solver.table(cls.attainable_p)});
  }
  return rows;
}

const std::map<SumSymbol, Rational>& published_values() {
  static const std::map<SumSymbol, Rational> values = [] {
    std::map<SumSymbol, Rational> v;
    auto put = [&](SumKind kind, int p, std::string_view r) {
      v.emplace(SumSymbol(kind, p), Rational::parse(r));
    };
    put(SumKind::zeta, 2, "1/6");
    put(SumKind::zeta, 4, "1/90");
    put(SumKind::zeta, 6, "1/945");
    put(SumKind::zeta, 8, "1/9450");
    put(SumKind::zeta, 10, "1/93555");
    put(SumKind::zeta, 12, "691/638512875");
    put(SumKind::zeta, 14, "2/18243225");
    put(SumKind::zeta, 16, "3617/325641566250");
    put(SumKind::eta, 2, "1/12");
    put(SumKind::eta, 4, "7/720");
    put(SumKind::eta, 6, "31/31240");
    put(SumKind::eta, 8, "127/1209600");
    put(SumKind::eta, 10, "73/6842880");
    put(SumKind::eta, 12, "1414477/1307674368000");
    put(SumKind::eta, 14, "8191/74724249600");
    put(SumKind::eta, 16, "16931177/1524374691840000");
    put(SumKind::lambda, 2, "1/8");
    put(SumKind::lambda, 4, "1/96");
    put(SumKind::lambda, 6, "1/960");
    put(SumKind::lambda, 8, "17/161280");
    put(SumKind::lambda, 10, "31/2903040");
    put(SumKind::lambda, 12, "691/638668800");
    put(SumKind::lambda, 14, "5461/49816166400");
    put(SumKind::lambda, 16, "929569/83691159552000");
    return v;
  }();
  return values;
}

std::vector<Discrepancy> compare_with_published(const ClosedFormTable& table) {
  std::vector<Discrepancy> out;
  for (const auto& [s, e] : table.entries()) {
    const auto it = published_values().find(s);
    if (it == published_values().end()) continue;
    if (it->second != e.value.coefficient()) {
      out.push_back({s, it->second, e.value.coefficient()});
    }
  }
  return out;
}

AnalysisReport analyze(const BoxPolynomial& p, const ClosedFormTable* table) {
  const Rational norm = norm_squared(p);
  const Rational energy = direct_moment(p, 1);
  AnalysisReport r{p.to_string(),
                   p.degree(),
                   norm,
                   energy,
                   energy / Rational(2),
                   direct_moment(p, 2),
                   weight_form(p),
                   {},
                   shift_parity(p),
                   false,
                   node_count(p)};
  r.lambda_only = detect_lambda_only(r.weight);

  const auto known = table ? table->normalized() : std::map<SumSymbol, Rational>{};
  for (int k = 0; k <= 2; ++k) {
    MomentReport m{k, std::nullopt, direct_moment(p, k), std::nullopt};
    try {
      m.form = moment_series(r.weight, k);
    } catch (const Divergent&) {
      r.moments.push_back(std::move(m));
      continue;
    }
    if (table) {
      if (const auto value = m.form->evaluate(known)) m.residual = *value - m.direct;
    }
    r.moments.push_back(std::move(m));
  }
  return r;
}

}  // namespace qbox
