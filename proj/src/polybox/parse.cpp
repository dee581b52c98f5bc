#include <cctype>
#include <string>

#include "qbox/errors.hpp"
#include "qbox/polybox.hpp"

namespace qbox {

namespace {

// Recursive descent over
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | <implicit> power)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := number | 'x' | '(' expr ')'
// Division is only allowed by a constant. Implicit multiplication covers
// forms like "2x" and "x(1-x)".
class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      if (c == '+') {
        acc += term();
      } else {
        acc -= term();
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        ++pos_;
        const Polynomial d = unary();
        if (d.degree() != 0) fail("division by a non-constant");
        acc *= d.leading().inverse();
      } else if (c == 'x' || c == '(') {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (e > 64) fail("exponent too large");
    return base.pow(e);
  }

  Polynomial primary() {
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      return Polynomial::monomial(1);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Polynomial::constant(number());
    fail("expected number, 'x' or '('");
  }

  // Decimal literal converted exactly: "1.25" -> 5/4.
  Rational number() {
    std::string digits;
    std::int64_t scale_digits = 0;
    bool seen_point = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits.push_back(c);
        if (seen_point) ++scale_digits;
      } else if (c == '.' && !seen_point) {
        seen_point = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) fail("malformed number");
    const Rational mantissa = Rational::parse(digits);
    return mantissa / Rational(10).pow(static_cast<int>(scale_digits));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  if (text.find('x') != std::string_view::npos) return ExpressionParser(text).parse();
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    coeffs.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

BoxPolynomial parse_wavefunction(std::string_view text) {
  return BoxPolynomial(parse_polynomial(text));
}

}  // namespace qbox
