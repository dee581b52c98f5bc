#include <doctest.h>

#include <algorithm>
#include <random>

#include "qbox/errors.hpp"
#include "qbox/exactalg.hpp"

using namespace qbox;

namespace {

SumSymbol z(int p) { return {SumKind::zeta, p}; }
SumSymbol e(int p) { return {SumKind::eta, p}; }
SumSymbol l(int p) { return {SumKind::lambda, p}; }

LinearEquation eq(std::initializer_list<std::pair<SumSymbol, Rational>> terms, Rational rhs) {
  LinearForm f;
  for (const auto& [s, c] : terms) f.add(s, c);
  return {f, rhs};
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(rational_arithmetic(Rational(1, 2), Rational(1, 3), ArithOp::add) == Rational(5, 6));
  CHECK(rational_arithmetic(Rational(1, 90), Rational(0), ArithOp::mul).to_string() == "0");
  CHECK(rational_arithmetic(Rational(3, 4), Rational(1, 4), ArithOp::sub) == Rational(1, 2));
  CHECK(rational_arithmetic(Rational(3, 4), Rational(3, 2), ArithOp::div) == Rational(1, 2));
  CHECK_THROWS_AS(rational_arithmetic(Rational(1), Rational(0), ArithOp::div), DivisionByZero);

  // norm^2 of x^2(1-x): 1/5 - 2/6 + 1/7 = (21 - 35 + 15)/105
  const Rational composite = Rational(1, 5) - Rational(2, 6) + Rational(1, 7);
  CHECK(composite == Rational(21 - 35 + 15, 105));
  CHECK(composite.to_string() == "1/105");
}

TEST_CASE("rational canonical form") {
  const Rational r(6, -4);
  CHECK(r.to_string() == "-3/2");
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, -7).to_string() == "0");
  CHECK(Rational(0, -7).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-1000, 1000);
  for (int i = 0; i < 200; ++i) {
    const int a = d(rng), b = d(rng), c = d(rng), e2 = d(rng);
    if (b == 0 || e2 == 0) continue;
    const Rational x = Rational(a, b) * Rational(c, e2) + Rational(a, e2);
    CHECK(x.denominator() > 0);
    CHECK(gcd(abs(x.numerator()), x.denominator()) == 1);
  }
}

TEST_CASE("rational parse and serialize") {
  CHECK(Rational::parse("1414477/1307674368000").to_string() == "1414477/1307674368000");
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("42").to_string() == "42");
  CHECK(Rational::parse(" 7/1 ").to_string() == "7");
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  // Beyond 64-bit range; expected value from Python big integers.
  const Rational big = Rational::parse("1524374691840000").pow(3);
  CHECK(big.to_string() == "3542217216758797525745008329621504000000000000");
}

TEST_CASE("rational to double rounds to nearest") {
  CHECK(Rational(108, 5).to_double() == 21.6);
  CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
  CHECK(Rational(-2, 3).to_double() == -2.0 / 3.0);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> d(-100000, 100000);
  for (int i = 0; i < 500; ++i) {
    const int a = d(rng), b = d(rng);
    if (b == 0) continue;
    // IEEE division of exactly representable operands is correctly rounded.
    CHECK(Rational(a, b).to_double() == static_cast<double>(a) / static_cast<double>(b));
  }
  // 1 + 2^-53 is a tie between 1 and 1 + 2^-52; even mantissa wins.
  CHECK((Rational(1) + Rational(2).pow(-53)).to_double() == 1.0);
  CHECK((Rational(1) + Rational(3) * Rational(2).pow(-53)).to_double() == 1.0 + 0x1p-51);
}

TEST_CASE("pi scaled and symbols") {
  CHECK(PiScaled(Rational(1, 96), 4).to_string() == "1/96*pi^4");
  CHECK(PiScaled(Rational(0), 8).pi_power() == 0);
  CHECK_THROWS_AS(PiScaled(Rational(1), 3), InvalidArgument);
  CHECK_THROWS_AS(SumSymbol(SumKind::zeta, 3), InvalidArgument);
  CHECK_THROWS_AS(SumSymbol(SumKind::zeta, 0), InvalidArgument);
  CHECK(z(4) < e(4));
  CHECK(e(16) < l(2));
  CHECK(z(4) < z(6));
}

TEST_CASE("linear form keeps no zero coefficients") {
  LinearForm f;
  f.add(z(4), Rational(3));
  f.add(z(4), Rational(-3));
  CHECK(f.empty());
  f.add(e(6), Rational(2));
  f *= Rational(0);
  CHECK(f.empty());
  f.add(l(4), Rational(960));
  f.add_constant(Rational(-10));
  CHECK(f.to_string() == "960*X[lambda(4)] - 10");
  CHECK(*f.evaluate({{l(4), Rational(1, 96)}}) == Rational(0));
  CHECK_FALSE(f.evaluate({}).has_value());
}

TEST_CASE("solve_exact: single lambda equation") {
  const auto r = solve_exact({eq({{l(4), Rational(960)}}, Rational(10))});
  REQUIRE(r.complete());
  CHECK(r.resolved.at(l(4)) == Rational(1, 96));
}

TEST_CASE("solve_exact: zeta(4), eta(4) from two cubic states") {
  const auto r = solve_exact({
      eq({{z(4), Rational(30240)}, {e(4), Rational(-30240)}}, Rational(42)),
      eq({{z(4), Rational(4200)}, {e(4), Rational(-3360)}}, Rational(14)),
  });
  REQUIRE(r.complete());
  CHECK(r.resolved.at(z(4)) == Rational(1, 90));
  CHECK(r.resolved.at(e(4)) == Rational(7, 720));
}

TEST_CASE("solve_exact: rank deficiency and inconsistency") {
  const auto r = solve_exact({eq({{z(4), Rational(1)}, {e(4), Rational(1)}}, Rational(1))});
  CHECK(r.resolved.empty());
  REQUIRE(r.unresolved.size() == 2);
  CHECK(r.unresolved[0] == z(4));
  CHECK(r.unresolved[1] == e(4));

  // Partial resolution: x is pinned, y + w free.
  const auto partial = solve_exact({
      eq({{z(4), Rational(2)}}, Rational(1)),
      eq({{e(4), Rational(1)}, {l(4), Rational(1)}}, Rational(3)),
  });
  CHECK(partial.resolved.at(z(4)) == Rational(1, 2));
  CHECK(partial.unresolved.size() == 2);

  CHECK_THROWS_AS(solve_exact({
                      eq({{z(4), Rational(1)}, {e(4), Rational(1)}}, Rational(1)),
                      eq({{z(4), Rational(2)}, {e(4), Rational(2)}}, Rational(3)),
                  }),
                  Inconsistent);
}

TEST_CASE("solve_exact: constants move to the right-hand side") {
  LinearForm f;
  f.add(z(2), Rational(6));
  f.add_constant(Rational(-1));
  const auto r = solve_exact({{f, Rational(0)}});
  CHECK(r.resolved.at(z(2)) == Rational(1, 6));
}

TEST_CASE("solve_exact properties: residual zero and order independence") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  const std::vector<SumSymbol> syms{z(2), e(2), z(4), e(4), l(6), z(8)};

  for (int trial = 0; trial < 40; ++trial) {
    std::map<SumSymbol, Rational> truth;
    for (const auto& s : syms) truth.emplace(s, Rational(coef(rng), den(rng)));

    std::vector<LinearEquation> sys;
    for (int i = 0; i < 9; ++i) {
      LinearForm f;
      for (const auto& s : syms) {
        if (rng() % 3 != 0) f.add(s, Rational(coef(rng), den(rng)));
      }
      sys.push_back({f, *f.evaluate(truth)});
    }
    const auto r = solve_exact(sys);
    for (const auto& [s, v] : r.resolved) CHECK(v == truth.at(s));
    if (r.complete()) {
      for (const auto& e2 : sys) {
        std::map<SumSymbol, Rational> sol = r.resolved;
        CHECK(*e2.form.evaluate(sol) == e2.rhs);
      }
    }

    auto shuffled = sys;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto r2 = solve_exact(shuffled);
    CHECK(r2.resolved == r.resolved);
    CHECK(r2.unresolved == r.unresolved);
  }
}
