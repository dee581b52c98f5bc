#include "qbox/exactalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qbox/errors.hpp"

namespace qbox {

PiScaled::PiScaled(Rational coefficient, int pi_power)
    : coefficient_(std::move(coefficient)), pi_power_(pi_power) {
  if (pi_power_ < 0 || pi_power_ % 2 != 0) {
    throw InvalidArgument("pi power must be even and non-negative, got " +
                          std::to_string(pi_power_));
  }
  if (coefficient_.is_zero()) pi_power_ = 0;
}

std::string PiScaled::to_string() const {
  if (pi_power_ == 0) return coefficient_.to_string();
  return coefficient_.to_string() + "*pi^" + std::to_string(pi_power_);
}

std::string_view to_string(SumKind kind) {
  switch (kind) {
    case SumKind::zeta: return "zeta";
    case SumKind::eta: return "eta";
    case SumKind::lambda: return "lambda";
  }
  return "?";
}

SumKind parse_sum_kind(std::string_view name) {
  if (name == "zeta") return SumKind::zeta;
  if (name == "eta") return SumKind::eta;
  if (name == "lambda") return SumKind::lambda;
  throw ParseError("unknown sum kind '" + std::string(name) + "'");
}

SumSymbol::SumSymbol(SumKind kind, int argument) : kind_(kind), argument_(argument) {
  if (argument < 2 || argument % 2 != 0) {
    throw InvalidArgument("sum argument must be even and >= 2, got " + std::to_string(argument));
  }
}

std::string SumSymbol::to_string() const {
  return std::string(qbox::to_string(kind_)) + "(" + std::to_string(argument_) + ")";
}

Rational LinearForm::coefficient(const SumSymbol& s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? Rational{} : it->second;
}

void LinearForm::add(const SumSymbol& s, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LinearForm& LinearForm::operator+=(const LinearForm& rhs) {
  constant_ += rhs.constant_;
  for (const auto& [s, c] : rhs.terms_) add(s, c);
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& rhs) {
  constant_ -= rhs.constant_;
  for (const auto& [s, c] : rhs.terms_) add(s, -c);
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    constant_ = Rational{};
    return *this;
  }
  constant_ *= factor;
  for (auto& [s, c] : terms_) c *= factor;
  return *this;
}

std::optional<Rational> LinearForm::evaluate(const std::map<SumSymbol, Rational>& values) const {
  Rational total = constant_;
  for (const auto& [s, c] : terms_) {
    const auto it = values.find(s);
    if (it == values.end()) return std::nullopt;
    total += c * it->second;
  }
  return total;
}

std::string LinearForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& tail) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    const Rational mag = c.abs();
    if (tail.empty()) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << '*';
      os << tail;
    }
    first = false;
  };
  for (const auto& [s, c] : terms_) emit(c, "X[" + s.to_string() + "]");
  if (!constant_.is_zero() || first) emit(constant_, "");
  return os.str();
}

SolveResult solve_exact(const std::vector<LinearEquation>& system) {
  std::set<SumSymbol> appearing;
  for (const auto& eq : system) {
    for (const auto& [s, c] : eq.form.terms()) appearing.insert(s);
  }
  const std::vector<SumSymbol> columns(appearing.begin(), appearing.end());
  const std::size_t ncols = columns.size();

  // Dense augmented matrix; the last column holds the right-hand side.
  std::vector<std::vector<Rational>> rows;
  rows.reserve(system.size());
  for (const auto& eq : system) {
    std::vector<Rational> row(ncols + 1);
    for (std::size_t j = 0; j < ncols; ++j) row[j] = eq.form.coefficient(columns[j]);
    row[ncols] = eq.rhs - eq.form.constant();
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_col_of_row;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < ncols && next_row < rows.size(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next_row], rows[pivot]);

    auto& prow = rows[next_row];
    const Rational inv = prow[col].inverse();
    for (std::size_t j = col; j <= ncols; ++j) {
      if (!prow[j].is_zero()) prow[j] *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next_row || rows[i][col].is_zero()) continue;
      const Rational factor = rows[i][col];
      for (std::size_t j = col; j <= ncols; ++j) {
        if (!prow[j].is_zero()) rows[i][j] -= factor * prow[j];
      }
    }
    pivot_col_of_row.push_back(col);
    ++next_row;
  }

  for (std::size_t i = next_row; i < rows.size(); ++i) {
    if (!rows[i][ncols].is_zero()) {
      throw Inconsistent("elimination produced 0 = " + rows[i][ncols].to_string());
    }
  }

  SolveResult result;
  std::vector<bool> resolved(ncols, false);
  for (std::size_t i = 0; i < next_row; ++i) {
    const std::size_t col = pivot_col_of_row[i];
    const auto& row = rows[i];
    bool lone = true;
    for (std::size_t j = col + 1; j < ncols && lone; ++j) lone = row[j].is_zero();
    if (lone) {
      resolved[col] = true;
      result.resolved.emplace(columns[col], row[ncols]);
    }
  }
  for (std::size_t j = 0; j < ncols; ++j) {
    if (!resolved[j]) result.unresolved.push_back(columns[j]);
  }
  return result;
}

}  // namespace qbox
