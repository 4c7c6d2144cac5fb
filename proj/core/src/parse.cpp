// Recursive-descent parser for the expression grammar:
//
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number | name | name '(' sum ')' | '(' sum ')'

#include <cctype>
#include <charconv>
#include <numbers>

#include "cartan/error.hpp"
#include "cartan/expr.hpp"

namespace cartan {
namespace {

using Kind = Expr::Kind;

class Parser {
 public:
  Parser(std::string_view text, const Variables& vars)
      : text_(text), vars_(vars) {}

  Expr parse() {
    Expr e = sum();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error: " + what, pos_);
  }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what, at);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr sum() {
    Expr lhs = product();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(Kind::Add, lhs, product());
      } else if (accept('-')) {
        lhs = Expr::binary(Kind::Sub, lhs, product());
      } else {
        return lhs;
      }
    }
  }

  Expr product() {
    Expr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(Kind::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = Expr::binary(Kind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return Expr::unary(Kind::Negate, unary());
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    const Expr exponent = unary();
    if (exponent.arity() != 0) {
      fail_at("exponent must be a constant", at);
    }
    double value = 0.0;
    try {
      value = exponent.eval({});
    } catch (const EvalError& e) {
      fail_at(std::string("exponent does not evaluate: ") + e.what(), at);
    }
    return Expr::power(base, value);
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return number();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return name();
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Expr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) fail_at("syntax error: malformed number", start);
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        ++pos_;
      }
      if (digits() == 0) fail("malformed exponent");
    }
    double value = 0.0;
    const auto res =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc() || res.ptr != text_.data() + pos_) {
      fail_at("syntax error: malformed number", start);
    }
    return Expr::constant(value);
  }

  Expr name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view id = text_.substr(start, pos_ - start);
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      Kind k;
      if (id == "sin") {
        k = Kind::Sin;
      } else if (id == "cos") {
        k = Kind::Cos;
      } else if (id == "exp") {
        k = Kind::Exp;
      } else if (id == "log") {
        k = Kind::Log;
      } else if (id == "sqrt") {
        k = Kind::Sqrt;
      } else {
        fail_at("unknown function '" + std::string(id) + "'", start);
      }
      ++pos_;
      Expr arg = sum();
      if (!accept(')')) fail("expected ')'");
      return Expr::unary(k, arg);
    }
    if (vars_.contains(id)) return Expr::variable(vars_.index_of(id));
    if (id == "pi") return Expr::constant(std::numbers::pi);
    fail_at("unknown identifier '" + std::string(id) + "'", start);
  }

  std::string_view text_;
  const Variables& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, const Variables& vars) {
  return Parser(text, vars).parse();
}

}  // namespace cartan
