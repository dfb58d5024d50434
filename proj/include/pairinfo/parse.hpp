#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pairinfo/errors.hpp"
#include "pairinfo/nat.hpp"
#include "pairinfo/poly.hpp"

namespace pairinfo {

namespace detail {

enum class tok_kind { number, ident, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  tok_kind kind;
  std::size_t pos;
  Rational value;      // number
  bool fractional = false;  // number written with '/'
  std::string name;    // ident
};

inline std::vector<Token> lex_expression(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      Nat num{std::string(text.substr(start, i - start))};
      Token t{tok_kind::number, start, Rational(num), false, ""};
      // a '/' straight after digits binds as a rational literal
      if (i < text.size() && text[i] == '/') {
        std::size_t den_start = i + 1;
        std::size_t j = den_start;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == den_start) throw parse_error("expected digits after '/'", i + 1);
        Nat den{std::string(text.substr(den_start, j - den_start))};
        if (den == 0) throw parse_error("zero denominator in literal", den_start);
        t.value = Rational(num, den);
        t.fractional = true;
        i = j;
      }
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])))) ++i;
      out.push_back({tok_kind::ident, start, Rational(0), false,
                     std::string(text.substr(start, i - start))});
      continue;
    }
    tok_kind kind;
    switch (ch) {
      case '+': kind = tok_kind::plus; break;
      case '-': kind = tok_kind::minus; break;
      case '*': kind = tok_kind::star; break;
      case '^': kind = tok_kind::caret; break;
      case '(': kind = tok_kind::lparen; break;
      case ')': kind = tok_kind::rparen; break;
      default:
        throw parse_error(std::string("unexpected character '") + ch + "'", i);
    }
    out.push_back({kind, i, Rational(0), false, ""});
    ++i;
  }
  out.push_back({tok_kind::end, text.size(), Rational(0), false, ""});
  return out;
}

// Recursive descent over:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*' factor) | group)*        group: juxtaposed '('
//   factor := '-' factor | primary ['^' integer]
//   primary:= number | variable | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t arity)
      : tokens_(lex_expression(text)), arity_(arity) {
    if (arity == 0) throw domain_error("parse_poly: arity must be >= 1");
  }

  MultiPoly parse() {
    MultiPoly result = parse_expr();
    if (peek().kind != tok_kind::end)
      throw parse_error("unexpected trailing input", peek().pos);
    return result;
  }

 private:
  static constexpr unsigned kMaxExponent = 64;

  const Token& peek() const { return tokens_[index_]; }
  const Token& advance() { return tokens_[index_++]; }
  bool accept(tok_kind k) {
    if (peek().kind == k) {
      ++index_;
      return true;
    }
    return false;
  }

  MultiPoly parse_expr() {
    MultiPoly acc(arity_);
    bool negate_first = accept(tok_kind::minus);
    MultiPoly first = parse_term();
    acc = negate_first ? -first : first;
    while (true) {
      if (accept(tok_kind::plus)) {
        acc += parse_term();
      } else if (accept(tok_kind::minus)) {
        acc -= parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly parse_term() {
    MultiPoly acc = parse_factor();
    while (true) {
      if (accept(tok_kind::star)) {
        acc = acc * parse_factor();
      } else if (peek().kind == tok_kind::lparen) {
        acc = acc * parse_factor();  // implicit multiplication
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly parse_factor() {
    if (accept(tok_kind::minus)) return -parse_factor();
    MultiPoly base = parse_primary();
    if (accept(tok_kind::caret)) return base.pow(parse_exponent());
    return base;
  }

  unsigned parse_exponent() {
    const Token& t = peek();
    if (t.kind == tok_kind::minus)
      throw parse_error("negative exponent", t.pos);
    if (t.kind != tok_kind::number)
      throw parse_error("expected integer exponent", t.pos);
    if (t.fractional || denominator(t.value) != 1)
      throw parse_error("fractional exponent", t.pos);
    advance();
    Nat e = numerator(t.value);
    if (e > kMaxExponent)
      throw parse_error("exponent exceeds supported maximum " +
                            std::to_string(kMaxExponent),
                        t.pos);
    return static_cast<unsigned>(e);
  }

  MultiPoly parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case tok_kind::number:
        advance();
        return MultiPoly::constant(arity_, t.value);
      case tok_kind::ident: {
        advance();
        return MultiPoly::variable(arity_, variable_index(t));
      }
      case tok_kind::lparen: {
        advance();
        MultiPoly inner = parse_expr();
        if (!accept(tok_kind::rparen))
          throw parse_error("expected ')'", peek().pos);
        return inner;
      }
      default:
        throw parse_error("expected a number, variable or '('", t.pos);
    }
  }

  std::size_t variable_index(const Token& t) const {
    const std::string& name = t.name;
    if (arity_ == 1 && name == "x") return 0;
    if (arity_ == 2 && name == "x") return 0;
    if (arity_ == 2 && name == "y") return 1;
    if (name.size() >= 2 && name[0] == 'x') {
      std::size_t idx = 0;
      bool ok = name.size() <= 7;  // generous cap on the digit suffix
      for (std::size_t i = 1; ok && i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) ok = false;
        idx = idx * 10 + static_cast<std::size_t>(name[i] - '0');
      }
      if (ok && idx >= 1 && idx <= arity_ && name[1] != '0') return idx - 1;
    }
    throw parse_error("unknown variable '" + name + "'", t.pos);
  }

  std::vector<Token> tokens_;
  std::size_t arity_;
  std::size_t index_ = 0;
};

}  // namespace detail

/// Parse an expression over +, -, *, ^, parentheses, integer and p/q
/// literals, and juxtaposed parenthesized groups into canonical form.
inline MultiPoly parse_poly(std::string_view text, std::size_t arity) {
  return detail::PolyParser(text, arity).parse();
}

}  // namespace pairinfo
