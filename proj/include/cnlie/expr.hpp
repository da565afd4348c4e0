#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "cnlie/element.hpp"
#include "cnlie/errors.hpp"

namespace cnlie {

// Linear-combination expressions over the monomial basis:
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | '(' expr ')' | atom
//   atom    := 'g' '{' int (',' int)* '}' | 'e' | 'i' | int ('/' int)?
// g{...} indices must be strictly increasing; errors carry byte offsets.
class ExpressionParser {
 public:
  ExpressionParser(std::string text, int n) : text_(std::move(text)), n_(n) {}

  CliffordElement parse() {
    CliffordElement out = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return out;
  }

 private:
  std::string text_;
  int n_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  CliffordElement parse_expr() {
    CliffordElement acc = parse_term();
    while (true) {
      if (consume('+'))
        acc += parse_term();
      else if (consume('-'))
        acc -= parse_term();
      else
        return acc;
    }
  }

  CliffordElement parse_term() {
    CliffordElement acc = parse_factor();
    while (consume('*')) acc = multiply(acc, parse_factor());
    return acc;
  }

  CliffordElement parse_factor() {
    if (consume('-')) return -parse_factor();
    if (consume('(')) {
      CliffordElement inner = parse_expr();
      if (!consume(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    return parse_atom();
  }

  CliffordElement parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected operand", pos_);
    const char c = text_[pos_];
    if (c == 'e') {
      ++pos_;
      return CliffordElement::unit(n_);
    }
    if (c == 'i') {
      ++pos_;
      return CliffordElement::monomial(BasisIndex::empty(n_), GaussianRational::imaginary_unit());
    }
    if (c == 'g') {
      ++pos_;
      return parse_monomial();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    throw ParseError("expected operand", pos_);
  }

  CliffordElement parse_monomial() {
    if (!consume('{')) throw ParseError("expected '{' after 'g'", pos_);
    std::vector<int> gens;
    while (true) {
      skip_ws();
      std::size_t at = pos_;
      long v = parse_integer();
      if (v < 1 || v > n_) throw ParseError("generator index out of range 1..n", at);
      if (!gens.empty() && v <= gens.back())
        throw ParseError("generator indices must be strictly increasing", at);
      gens.push_back(static_cast<int>(v));
      if (consume(',')) continue;
      if (consume('}')) break;
      throw ParseError("expected ',' or '}'", pos_);
    }
    return CliffordElement::monomial(BasisIndex::from_generators(gens, n_));
  }

  CliffordElement parse_number() {
    std::size_t at = pos_;
    long num = parse_integer();
    long den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t dat = pos_;
      den = parse_integer();
      if (den == 0) throw ParseError("zero denominator", dat);
    }
    (void)at;
    return CliffordElement::monomial(BasisIndex::empty(n_),
                                     GaussianRational(make_rational(num, den)));
  }

  long parse_integer() {
    skip_ws();
    std::size_t at = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer", pos_);
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000000L) throw ParseError("integer literal too large", at);
      ++pos_;
    }
    return v;
  }
};

inline CliffordElement parse_element(const std::string& text, int n) {
  return ExpressionParser(text, n).parse();
}

}  // namespace cnlie
