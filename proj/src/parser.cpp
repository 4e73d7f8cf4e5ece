#include "symred/parser.hpp"

#include <cctype>
#include <limits>

#include "symred/errors.hpp"

namespace symred {

namespace {

enum class Tok { number, variable, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t index = 0;  // variable index (1-based) for Tok::variable
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t c = 0; c < count; ++c, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    Token tok{Tok::end, std::string(1, ch), 0, line, col};
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      tok.kind = Tok::number;
      tok.text = src.substr(i, j - i);
      out.push_back(tok);
      advance(j - i);
      continue;
    }
    if (ch == 'x') {
      std::size_t j = i + 1;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j == i + 1) throw ParseError("expected a variable index after 'x'", line, col);
      tok.kind = Tok::variable;
      tok.text = src.substr(i, j - i);
      const std::string digits = src.substr(i + 1, j - i - 1);
      if (digits.size() > 9) throw ParseError("variable index too large", line, col);
      tok.index = std::stoul(digits);
      if (tok.index == 0) throw ParseError("variable indices start at 1", line, col);
      out.push_back(tok);
      advance(j - i);
      continue;
    }
    switch (ch) {
      case '+': tok.kind = Tok::plus; break;
      case '-': tok.kind = Tok::minus; break;
      case '*': tok.kind = Tok::star; break;
      case '/': tok.kind = Tok::slash; break;
      case '^': tok.kind = Tok::caret; break;
      case '(': tok.kind = Tok::lparen; break;
      case ')': tok.kind = Tok::rparen; break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
    }
    out.push_back(tok);
    advance(1);
  }
  out.push_back(Token{Tok::end, "end of input", 0, line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::size_t n) : toks_(std::move(toks)), n_(n) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().line, peek().column); }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = next().kind == Tok::minus;
      MultiPoly rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const Token op = next();
      MultiPoly rhs = unary();
      if (op.kind == Tok::star) {
        acc = acc * rhs;
        continue;
      }
      if (!rhs.is_constant() || rhs.is_zero()) {
        throw ParseError("division is only allowed by a nonzero constant", op.line, op.column);
      }
      acc *= Rational(1 / rhs.constant_term());
    }
    return acc;
  }

  MultiPoly unary() {
    if (peek().kind == Tok::minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::plus) {
      next();
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (peek().kind != Tok::caret) return base;
    next();
    if (peek().kind != Tok::number) fail("expected a non-negative integer exponent");
    const Token& e = next();
    if (e.text.size() > 6) throw ParseError("exponent too large", e.line, e.column);
    return base.pow(static_cast<std::uint32_t>(std::stoul(e.text)));
  }

  MultiPoly primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        next();
        return MultiPoly::constant(n_, Rational(Integer(t.text)));
      }
      case Tok::variable: {
        if (t.index > n_) {
          fail("variable " + t.text + " out of range for n = " + std::to_string(n_));
        }
        next();
        return MultiPoly::variable(n_, t.index - 1);
      }
      case Tok::lparen: {
        next();
        MultiPoly inner = expr();
        if (peek().kind != Tok::rparen) fail("expected ')'");
        next();
        return inner;
      }
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t n_;
};

}  // namespace

MultiPoly parse_polynomial(const std::string& text, std::optional<std::size_t> n) {
  auto toks = tokenize(text);
  std::size_t vars = n.value_or(0);
  if (!n) {
    vars = 1;
    for (const auto& t : toks) {
      if (t.kind == Tok::variable) vars = std::max(vars, t.index);
    }
  }
  return Parser(std::move(toks), vars).parse();
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(start, comma - start);
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    item = b == std::string::npos ? std::string() : item.substr(b, e - b + 1);
    if (!item.empty() && item[0] == '+') item.erase(0, 1);
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed rational '" + item + "'", 1, start + 1);
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace symred
