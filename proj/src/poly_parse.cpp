#include <cctype>

#include "conformal/poly.hpp"

namespace conformal {

ParseError::ParseError(std::size_t column, const std::string& message)
    : std::runtime_error("column " + std::to_string(column + 1) + ": " +
                         message),
      column_(column) {}

namespace {

// Recursive-descent parser for
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := rational | var | '(' expr ')' | '-' factor
class Parser {
 public:
  Parser(std::string_view text, VarSet allowed)
      : text_(text), allowed_(allowed) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, peek()) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_, msg);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = factor();
    while (accept('*')) p *= factor();
    return p;
  }

  Poly factor() {
    Poly base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 4) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly atom() {
    char c = peek();
    if (c == '\0') fail("unexpected end of expression");
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::string den = read_digits();
        if (den.empty()) fail("expected denominator");
        Rational d(den);
        if (d == 0) fail("zero denominator");
        Rational q(num);
        q /= d;
        return Poly(q);
      }
      return Poly(Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto v = var_from_name(name);
      if (!v) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      if (!allowed_.test(v->id())) {
        pos_ = start;
        fail("variable '" + name + "' is not allowed here");
      }
      return Poly::variable(*v);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  VarSet allowed_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, VarSet allowed) {
  return Parser(text, allowed).parse();
}

}  // namespace conformal
