#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qbox/exactalg.hpp"
#include "qbox/polybox.hpp"
#include "qbox/spectral.hpp"

namespace qbox {

/// `lhs = rhs`, where lhs is a moment series of one state and rhs the same
/// moment computed directly as a quadratic form.
struct MomentEquation {
  LinearForm lhs;
  Rational rhs;
  std::string polynomial;
  int order = 1;

  LinearEquation as_linear() const { return {lhs, rhs}; }
};

/// rhs for moment order k of a state: 1, <H> or <H^2> in units hbar^2/(2ma^2) = 1.
Rational direct_moment(const BoxPolynomial& p, int k);

MomentEquation build_equation(const BoxPolynomial& p, int k, MomentOptions options = {});

struct ClosedFormEntry {
  PiScaled value;
  // Needed eta = (1 - 2^(1-p)) zeta or zeta + eta = 2 lambda to resolve.
  bool relation_derived = false;
};

/// Exact closed forms s(p) = c * pi^p keyed by symbol.
class ClosedFormTable {
 public:
  using Entries = std::map<SumSymbol, ClosedFormEntry>;

  void set(const SumSymbol& s, const Rational& normalized, bool relation_derived = false);
  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const ClosedFormEntry* find(const SumSymbol& s) const;
  bool contains(const SumSymbol& s) const { return find(s) != nullptr; }

  /// The normalized unknowns X(s) = s(p) / pi^p, ready for LinearForm::evaluate.
  std::map<SumSymbol, Rational> normalized() const;

  /// Entries whose argument lies in `arguments`.
  ClosedFormTable restricted(const std::vector<int>& arguments) const;

 private:
  Entries entries_;
};

struct DeriveOptions {
  bool use_relations = false;
  std::set<int> moment_orders{1, 2};
  bool allow_high_moments = false;
};

/// States introduced at a given degree, in generation order: the new
/// standard-family member, then the centred family of that degree.
std::vector<BoxPolynomial> generation_step(int degree);

/// Closed forms for zeta and eta at even 4 <= p <= max_p (and p = 2 when the
/// k = 2 moment is enabled), plus lambda = (zeta + eta)/2. Generates states of
/// increasing degree until every target is resolved. Throws Underdetermined
/// when the degree bound max_p + 2 is exhausted first.
ClosedFormTable derive(int max_p, const DeriveOptions& options = {});

struct DegreeClassification {
  int degree;
  std::vector<int> attainable_p;
};

/// Even degree n reaches p = 4..2n, odd degree n reaches p = 4..2n-2.
DegreeClassification classify(int degree);

struct TableRow {
  int degree;
  std::vector<int> attainable_p;
  ClosedFormTable table;
};

/// One row per degree 2..max_degree, each derived from states of that degree
/// or lower only. Rows fall back on the zeta/eta relations where the
/// states of that degree only expose lambda at the top argument.
std::vector<TableRow> reproduce_table(int max_degree);

/// Values as printed in the published table of even-argument sums, including
/// its p = 2 companions. eta(6) is reproduced verbatim as 31/31240.
const std::map<SumSymbol, Rational>& published_values();

struct Discrepancy {
  SumSymbol symbol;
  Rational published;  // normalized coefficient of pi^p
  Rational derived;
};

std::vector<Discrepancy> compare_with_published(const ClosedFormTable& table);

struct MomentReport {
  int order;
  std::optional<LinearForm> form;  // empty when divergent
  Rational direct;
  std::optional<Rational> residual;  // form(table) - direct, when computable
};

struct AnalysisReport {
  std::string polynomial;
  int degree;
  Rational norm_squared;
  Rational mean_energy;       // units hbar^2/(2 m a^2)
  Rational mean_energy_hbar;  // units hbar^2/(m a^2)
  Rational h2_moment;         // <H^2>, units (hbar^2/(2 m a^2))^2
  WeightForm weight;
  std::vector<MomentReport> moments;  // k = 0, 1, 2
  ShiftedParity parity;
  bool lambda_only;
  int nodes;
};

AnalysisReport analyze(const BoxPolynomial& p, const ClosedFormTable* table = nullptr);

}  // namespace qbox
