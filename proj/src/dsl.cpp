#include "milnor/dsl.hpp"

#include <cctype>
#include <cmath>
#include <regex>
#include <vector>

namespace milnor {

namespace {

enum class Tok { Ident, Number, Plus, Minus, Star, Caret, Slash, LParen, RParen, Eq, Semi, End };

struct Token {
  Tok kind;
  std::string text;
  double value = 0.0;
  bool is_decimal = false;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

  bool saw_decimal() const { return saw_decimal_; }

 private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    cur_.pos = i_;
    if (i_ >= src_.size()) {
      cur_.kind = Tok::End;
      cur_.text.clear();
      return;
    }
    const char c = src_[i_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < src_.size() && std::isalpha(static_cast<unsigned char>(src_[j]))) ++j;
      cur_ = {Tok::Ident, src_.substr(i_, j - i_), 0.0, false, i_};
      i_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      bool decimal = false;
      while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
      if (j < src_.size() && src_[j] == '.') {
        decimal = true;
        ++j;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
      }
      if (j < src_.size() && (src_[j] == 'e' || src_[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
        if (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) {
          decimal = true;
          while (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) ++k;
          j = k;
        }
      }
      const std::string text = src_.substr(i_, j - i_);
      cur_ = {Tok::Number, text, std::stod(text), decimal, i_};
      saw_decimal_ |= decimal;
      i_ = j;
      return;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '/': k = Tok::Slash; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '=': k = Tok::Eq; break;
      case ';': k = Tok::Semi; break;
      default:
        throw ParseError(ParseError::Kind::Syntax, i_,
                         std::string("unexpected character '") + c + "'");
    }
    cur_ = {k, std::string(1, c), 0.0, false, i_};
    ++i_;
  }

  const std::string& src_;
  std::size_t i_ = 0;
  Token cur_;
  bool saw_decimal_ = false;
};

// Complex-valued polynomial carried as a (Re, Im) pair during expansion.
struct CPoly {
  Poly4 re, im;
  CPoly operator+(const CPoly& o) const { return {re + o.re, im + o.im}; }
  CPoly operator-(const CPoly& o) const { return {re - o.re, im - o.im}; }
  CPoly operator-() const { return {-re, -im}; }
  CPoly operator*(const CPoly& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CPoly pow(int n) const {
    CPoly out{Poly4::constant(1.0), Poly4{}};
    CPoly base = *this;
    while (n > 0) {
      if (n & 1) out = out * base;
      base = base * base;
      n >>= 1;
    }
    return out;
  }
};

// One grammar for both modes; atoms differ.
template <typename Value>
class ExprParser {
 public:
  ExprParser(Lexer& lex, bool complex_mode) : lex_(lex), complex_(complex_mode) {}

  Value parse_expr() {
    Value acc = parse_term();
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      const Tok op = lex_.take().kind;
      Value rhs = parse_term();
      acc = (op == Tok::Plus) ? acc + rhs : acc - rhs;
    }
    return acc;
  }

 private:
  Value parse_term() {
    Value acc = parse_unary();
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::Star) {
        lex_.take();
        acc = acc * parse_unary();
      } else if (t.kind == Tok::Slash) {
        if (complex_)
          throw ParseError(ParseError::Kind::NonPolynomial, t.pos,
                           "division does not yield a polynomial");
        throw ParseError(ParseError::Kind::Syntax, t.pos, "unexpected '/'");
      } else {
        break;
      }
    }
    return acc;
  }

  Value parse_unary() {
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      return -parse_unary();
    }
    return parse_power();
  }

  Value parse_power() {
    Value base = parse_atom();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      const Token e = lex_.take();
      if (e.kind != Tok::Number || e.is_decimal)
        throw ParseError(ParseError::Kind::Syntax, e.pos,
                         "'^' requires a non-negative integer exponent");
      base = base.pow(static_cast<int>(e.value));
    }
    return base;
  }

  Value parse_atom();

  Lexer& lex_;
  bool complex_;
};

template <>
Poly4 ExprParser<Poly4>::parse_atom() {
  const Token t = lex_.take();
  if (t.kind == Tok::Number) return Poly4::constant(t.value);
  if (t.kind == Tok::LParen) {
    Poly4 inner = parse_expr();
    const Token close = lex_.take();
    if (close.kind != Tok::RParen)
      throw ParseError(ParseError::Kind::Syntax, close.pos, "expected ')'");
    return inner;
  }
  if (t.kind == Tok::Ident) {
    if (t.text == "x") return Poly4::variable(Var::X);
    if (t.text == "y") return Poly4::variable(Var::Y);
    if (t.text == "u") return Poly4::variable(Var::U);
    if (t.text == "v") return Poly4::variable(Var::V);
    throw ParseError(ParseError::Kind::UnknownIdentifier, t.pos,
                     "unknown identifier '" + t.text + "' (expected x, y, u or v)");
  }
  throw ParseError(ParseError::Kind::Syntax, t.pos, "expected a variable, number or '('");
}

template <>
CPoly ExprParser<CPoly>::parse_atom() {
  const Token t = lex_.take();
  if (t.kind == Tok::Number) return {Poly4::constant(t.value), Poly4{}};
  if (t.kind == Tok::LParen) {
    CPoly inner = parse_expr();
    const Token close = lex_.take();
    if (close.kind != Tok::RParen)
      throw ParseError(ParseError::Kind::Syntax, close.pos, "expected ')'");
    return inner;
  }
  if (t.kind == Tok::Ident) {
    if (t.text == "z") return {Poly4::variable(Var::X), Poly4::variable(Var::Y)};
    if (t.text == "w") return {Poly4::variable(Var::U), Poly4::variable(Var::V)};
    if (t.text == "conj") {
      const Token open = lex_.take();
      if (open.kind != Tok::LParen)
        throw ParseError(ParseError::Kind::Syntax, open.pos, "expected '(' after conj");
      const Token arg = lex_.take();
      if (arg.kind != Tok::Ident || (arg.text != "z" && arg.text != "w"))
        throw ParseError(ParseError::Kind::Syntax, arg.pos,
                         "conj applies directly to z or w only");
      const Token close = lex_.take();
      if (close.kind != Tok::RParen)
        throw ParseError(ParseError::Kind::Syntax, close.pos, "expected ')'");
      if (arg.text == "z") return {Poly4::variable(Var::X), -Poly4::variable(Var::Y)};
      return {Poly4::variable(Var::U), -Poly4::variable(Var::V)};
    }
    throw ParseError(ParseError::Kind::UnknownIdentifier, t.pos,
                     "unknown identifier '" + t.text + "' (expected z, w or conj)");
  }
  throw ParseError(ParseError::Kind::Syntax, t.pos, "expected z, w, conj, number or '('");
}

void expect_head(Lexer& lex, const std::string& name) {
  const Token head = lex.take();
  if (head.kind != Tok::Ident || head.text != name)
    throw ParseError(ParseError::Kind::Syntax, head.pos, "expected '" + name + " = ...'");
  const Token eq = lex.take();
  if (eq.kind != Tok::Eq)
    throw ParseError(ParseError::Kind::Syntax, eq.pos, "expected '=' after " + name);
}

}  // namespace

MapR4R2 parse_real(const std::string& src) {
  Lexer lex(src);
  ExprParser<Poly4> parser(lex, /*complex_mode=*/false);

  expect_head(lex, "f");
  Poly4 f = parser.parse_expr();
  const Token sep = lex.take();
  if (sep.kind != Tok::Semi)
    throw ParseError(ParseError::Kind::Syntax, sep.pos, "expected ';' between f and g");
  expect_head(lex, "g");
  Poly4 g = parser.parse_expr();
  if (lex.peek().kind == Tok::Semi) lex.take();
  if (lex.peek().kind != Tok::End)
    throw ParseError(ParseError::Kind::Syntax, lex.peek().pos, "trailing input after g");

  return MapR4R2(std::move(f), std::move(g), src);
}

MapR4R2 parse_complex(const std::string& src) {
  Lexer lex(src);
  ExprParser<CPoly> parser(lex, /*complex_mode=*/true);

  expect_head(lex, "F");
  CPoly value = parser.parse_expr();
  if (lex.peek().kind == Tok::Semi) lex.take();
  if (lex.peek().kind != Tok::End)
    throw ParseError(ParseError::Kind::Syntax, lex.peek().pos, "trailing input after expression");

  return MapR4R2(std::move(value.re), std::move(value.im), src);
}

MapSource parse_map(const std::string& src) {
  // Sniff the statement head.
  std::size_t i = 0;
  while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
  if (i >= src.size())
    throw ParseError(ParseError::Kind::Syntax, i, "empty map definition");

  Lexer lex(src);
  if (src[i] == 'F') {
    MapR4R2 m = parse_complex(src);
    Lexer probe(src);  // re-lex to recover the decimal flag
    while (probe.peek().kind != Tok::End) probe.take();
    return {src, MapKind::Complex, std::move(m), probe.saw_decimal()};
  }
  MapR4R2 m = parse_real(src);
  Lexer probe(src);
  while (probe.peek().kind != Tok::End) probe.take();
  return {src, MapKind::Real, std::move(m), probe.saw_decimal()};
}

std::string pretty_print(const MapR4R2& F) {
  return "f = " + F.f.to_string() + "; g = " + F.g.to_string();
}

std::optional<std::pair<int, int>> match_brieskorn(const std::string& src) {
  static const std::regex pattern(
      R"(^\s*F\s*=\s*z\s*(?:\^\s*(\d+))?\s*-\s*w\s*(?:\^\s*(\d+))?\s*;?\s*$)");
  std::smatch m;
  if (!std::regex_match(src, m, pattern)) return std::nullopt;
  const int p = m[1].matched ? std::stoi(m[1].str()) : 1;
  const int q = m[2].matched ? std::stoi(m[2].str()) : 1;
  if (p < 1 || q < 1) return std::nullopt;
  return std::make_pair(p, q);
}

}  // namespace milnor
