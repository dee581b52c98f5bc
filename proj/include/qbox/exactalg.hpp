#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbox/rational.hpp"

namespace qbox {

/// coefficient * pi^pi_power, with an even non-negative power.
class PiScaled {
 public:
  PiScaled() = default;
  PiScaled(Rational coefficient, int pi_power);

  const Rational& coefficient() const { return coefficient_; }
  int pi_power() const { return pi_power_; }

  /// "coefficient*pi^k", e.g. "691/638512875*pi^12".
  std::string to_string() const;

  friend bool operator==(const PiScaled&, const PiScaled&) = default;

 private:
  Rational coefficient_;
  int pi_power_ = 0;
};

// Declaration order fixes the solver's column order: zeta before eta before lambda.
enum class SumKind { zeta, eta, lambda };

std::string_view to_string(SumKind kind);
SumKind parse_sum_kind(std::string_view name);

/// zeta(p), eta(p) or lambda(p) for even p >= 2.
class SumSymbol {
 public:
  SumSymbol(SumKind kind, int argument);

  SumKind kind() const { return kind_; }
  int argument() const { return argument_; }

  /// "zeta(4)".
  std::string to_string() const;

  friend bool operator==(const SumSymbol&, const SumSymbol&) = default;
  friend auto operator<=>(const SumSymbol&, const SumSymbol&) = default;

 private:
  SumKind kind_;
  int argument_;
};

/// constant + sum of coefficient * X(s), where X(s) = s(p) / pi^p is the
/// normalized (rational-valued) unknown of a sum symbol.
class LinearForm {
 public:
  using Terms = std::map<SumSymbol, Rational>;

  LinearForm() = default;
  explicit LinearForm(Rational constant) : constant_(std::move(constant)) {}

  const Rational& constant() const { return constant_; }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const SumSymbol& s) const;
  bool empty() const { return terms_.empty(); }

  /// Accumulates into the coefficient of `s`, dropping it if it cancels.
  void add(const SumSymbol& s, const Rational& coefficient);
  void add_constant(const Rational& c) { constant_ += c; }

  LinearForm& operator+=(const LinearForm& rhs);
  LinearForm& operator-=(const LinearForm& rhs);
  LinearForm& operator*=(const Rational& factor);
  friend LinearForm operator*(LinearForm f, const Rational& k) { return f *= k; }

  /// Substitutes known normalized values; nullopt if any symbol is missing.
  std::optional<Rational> evaluate(const std::map<SumSymbol, Rational>& values) const;

  /// "960*X[lambda(4)] - 3/2*X[zeta(6)] + 1".
  std::string to_string() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  Rational constant_;
  Terms terms_;
};

/// One linear equation `form = rhs`. Any constant inside `form` is moved to
/// the right-hand side by the solver.
struct LinearEquation {
  LinearForm form;
  Rational rhs;
};

struct SolveResult {
  std::map<SumSymbol, Rational> resolved;
  std::vector<SumSymbol> unresolved;  // ascending symbol order

  bool complete() const { return unresolved.empty(); }
};

/// Exact Gauss-Jordan elimination over the rationals.
///
/// Columns are the appearing symbols in ascending SumSymbol order; each column
/// pivots on the first remaining row with a nonzero entry. A symbol is resolved
/// when its reduced row has no other nonzero entry; everything else is listed
/// as unresolved. Throws Inconsistent when a row reduces to 0 = c with c != 0.
SolveResult solve_exact(const std::vector<LinearEquation>& system);

}  // namespace qbox
