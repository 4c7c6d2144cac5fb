#include "cartan/expr.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "cartan/error.hpp"

namespace cartan {

// ---------------------------------------------------------------- Variables

Variables::Variables(std::initializer_list<std::string> names)
    : Variables(std::vector<std::string>(names)) {}

Variables::Variables(std::vector<std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) {
      throw ContextError("variable names must be nonempty");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) {
        throw ContextError("duplicate variable name '" + names[i] + "'");
      }
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::span<const std::string> Variables::names() const noexcept {
  if (!names_) return {};
  return {names_->data(), names_->size()};
}

std::size_t Variables::index_of(std::string_view name) const {
  const auto ns = names();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] == name) return i;
  }
  throw ContextError("unknown variable '" + std::string(name) + "'");
}

bool Variables::contains(std::string_view name) const noexcept {
  const auto ns = names();
  return std::find(ns.begin(), ns.end(), name) != ns.end();
}

bool operator==(const Variables& a, const Variables& b) noexcept {
  if (a.names_ == b.names_) return true;
  const auto x = a.names();
  const auto y = b.names();
  return std::equal(x.begin(), x.end(), y.begin(), y.end());
}

// --------------------------------------------------------------------- Expr

struct Expr::Node {
  Kind kind;
  double value;       // constant value or Pow exponent
  std::size_t index;  // variable index
  std::size_t size;
  std::size_t arity;
  Expr a;
  Expr b;
};

namespace {

using Kind = Expr::Kind;

bool is_unary(Kind k) {
  switch (k) {
    case Kind::Negate:
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Exp:
    case Kind::Log:
    case Kind::Sqrt:
    case Kind::Pow:
      return true;
    default:
      return false;
  }
}

bool is_binary(Kind k) {
  return k == Kind::Add || k == Kind::Sub || k == Kind::Mul || k == Kind::Div;
}

bool is_integer(double v) {
  return std::isfinite(v) && std::floor(v) == v;
}

[[noreturn]] void domain_error(const char* what) {
  throw EvalError(std::string("evaluation outside domain: ") + what);
}

double checked(double v) {
  if (!std::isfinite(v)) domain_error("non-finite result");
  return v;
}

double apply_unary(Kind k, double x, double exponent) {
  switch (k) {
    case Kind::Negate:
      return -x;
    case Kind::Sin:
      return std::sin(x);
    case Kind::Cos:
      return std::cos(x);
    case Kind::Exp:
      return checked(std::exp(x));
    case Kind::Log:
      if (!(x > 0.0)) domain_error("log of non-positive value");
      return std::log(x);
    case Kind::Sqrt:
      if (x < 0.0) domain_error("sqrt of negative value");
      return std::sqrt(x);
    case Kind::Pow:
      if (is_integer(exponent)) {
        if (x == 0.0 && exponent < 0.0) domain_error("zero to a negative power");
      } else if (!(x > 0.0)) {
        domain_error("non-integer power of non-positive base");
      }
      return checked(std::pow(x, exponent));
    default:
      break;
  }
  domain_error("bad unary node");
}

double apply_binary(Kind k, double x, double y) {
  switch (k) {
    case Kind::Add:
      return checked(x + y);
    case Kind::Sub:
      return checked(x - y);
    case Kind::Mul:
      return checked(x * y);
    case Kind::Div:
      if (y == 0.0) domain_error("division by zero");
      return checked(x / y);
    default:
      break;
  }
  domain_error("bad binary node");
}

// Tries to fold a unary operation on a constant; false when the operation
// is outside its domain (the node is then kept so evaluation reports it).
bool try_fold_unary(Kind k, double x, double exponent, double& out) {
  try {
    out = apply_unary(k, x, exponent);
    return true;
  } catch (const EvalError&) {
    return false;
  }
}

bool try_fold_binary(Kind k, double x, double y, double& out) {
  try {
    out = apply_binary(k, x, y);
    return true;
  } catch (const EvalError&) {
    return false;
  }
}

}  // namespace

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr::Expr() : Expr(0.0) {}

Expr::Expr(double value) {
  static const std::shared_ptr<const Node> zero = std::make_shared<const Node>(
      Node{Kind::Constant, 0.0, 0, 1, 0, Expr(nullptr), Expr(nullptr)});
  static const std::shared_ptr<const Node> one = std::make_shared<const Node>(
      Node{Kind::Constant, 1.0, 0, 1, 0, Expr(nullptr), Expr(nullptr)});
  if (value == 0.0 && !std::signbit(value)) {
    node_ = zero;
  } else if (value == 1.0) {
    node_ = one;
  } else {
    node_ = std::make_shared<const Node>(
        Node{Kind::Constant, value, 0, 1, 0, Expr(nullptr), Expr(nullptr)});
  }
}

Expr Expr::constant(double value) { return Expr(value); }

Expr Expr::variable(std::size_t index) {
  return Expr(std::make_shared<const Node>(
      Node{Kind::Variable, 0.0, index, 1, index + 1, Expr(nullptr), Expr(nullptr)}));
}

Expr Expr::unary(Kind kind, Expr arg) {
  if (!is_unary(kind) || kind == Kind::Pow) {
    throw ContextError("Expr::unary: not a unary kind");
  }
  const std::size_t size = arg.size() + 1;
  const std::size_t arity = arg.arity();
  return Expr(std::make_shared<const Node>(
      Node{kind, 0.0, 0, size, arity, std::move(arg), Expr(nullptr)}));
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs) {
  if (!is_binary(kind)) throw ContextError("Expr::binary: not a binary kind");
  const std::size_t size = lhs.size() + rhs.size() + 1;
  const std::size_t arity = std::max(lhs.arity(), rhs.arity());
  return Expr(std::make_shared<const Node>(
      Node{kind, 0.0, 0, size, arity, std::move(lhs), std::move(rhs)}));
}

Expr Expr::power(Expr base, double exponent) {
  const std::size_t size = base.size() + 1;
  const std::size_t arity = base.arity();
  return Expr(std::make_shared<const Node>(
      Node{Kind::Pow, exponent, 0, size, arity, std::move(base), Expr(nullptr)}));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }
double Expr::value() const noexcept { return node_->value; }
std::size_t Expr::index() const noexcept { return node_->index; }
const Expr& Expr::lhs() const noexcept { return node_->a; }
const Expr& Expr::rhs() const noexcept { return node_->b; }
std::size_t Expr::size() const noexcept { return node_ ? node_->size : 0; }
std::size_t Expr::arity() const noexcept { return node_ ? node_->arity : 0; }

double Expr::eval(std::span<const double> point) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Constant:
      return n.value;
    case Kind::Variable:
      if (n.index >= point.size()) {
        throw ContextError("evaluation point has too few coordinates");
      }
      return point[n.index];
    default:
      break;
  }
  if (is_binary(n.kind)) {
    return apply_binary(n.kind, n.a.eval(point), n.b.eval(point));
  }
  return apply_unary(n.kind, n.a.eval(point), n.value);
}

Expr::Scaled Expr::eval_scaled(std::span<const double> point) const {
  const Node& n = *node_;
  double v = 0.0;
  double scale = 0.0;
  if (n.kind == Kind::Constant || n.kind == Kind::Variable) {
    v = eval(point);
  } else if (is_binary(n.kind)) {
    const Scaled x = n.a.eval_scaled(point);
    const Scaled y = n.b.eval_scaled(point);
    v = apply_binary(n.kind, x.value, y.value);
    scale = std::max(x.scale, y.scale);
  } else {
    const Scaled x = n.a.eval_scaled(point);
    v = apply_unary(n.kind, x.value, n.value);
    scale = x.scale;
  }
  return {v, std::max(scale, std::abs(v))};
}

// ------------------------------------------------------- smart constructors

Expr operator+(const Expr& a, const Expr& b) {
  double folded;
  if (a.is_constant() && b.is_constant() &&
      try_fold_binary(Kind::Add, a.value(), b.value(), folded)) {
    return Expr(folded);
  }
  if (a.is_constant(0.0)) return b;
  if (b.is_constant(0.0)) return a;
  return Expr::binary(Kind::Add, a, b);
}

Expr operator-(const Expr& a, const Expr& b) {
  double folded;
  if (a.is_constant() && b.is_constant() &&
      try_fold_binary(Kind::Sub, a.value(), b.value(), folded)) {
    return Expr(folded);
  }
  if (b.is_constant(0.0)) return a;
  if (a.is_constant(0.0)) return -b;
  if (structurally_equal(a, b)) return Expr(0.0);
  return Expr::binary(Kind::Sub, a, b);
}

Expr operator*(const Expr& a, const Expr& b) {
  double folded;
  if (a.is_constant() && b.is_constant() &&
      try_fold_binary(Kind::Mul, a.value(), b.value(), folded)) {
    return Expr(folded);
  }
  if (a.is_constant(0.0) || b.is_constant(0.0)) return Expr(0.0);
  if (a.is_constant(1.0)) return b;
  if (b.is_constant(1.0)) return a;
  return Expr::binary(Kind::Mul, a, b);
}

Expr operator/(const Expr& a, const Expr& b) {
  double folded;
  if (a.is_constant() && b.is_constant() &&
      try_fold_binary(Kind::Div, a.value(), b.value(), folded)) {
    return Expr(folded);
  }
  if (b.is_constant(1.0)) return a;
  if (a.is_constant(0.0) && !b.is_constant(0.0)) return Expr(0.0);
  return Expr::binary(Kind::Div, a, b);
}

Expr operator-(const Expr& a) {
  if (a.is_constant()) return Expr(-a.value());
  if (a.kind() == Kind::Negate) return a.lhs();
  return Expr::unary(Kind::Negate, a);
}

namespace {

Expr fold_or_make(Kind k, const Expr& a) {
  double folded;
  if (a.is_constant() && try_fold_unary(k, a.value(), 0.0, folded)) {
    return Expr(folded);
  }
  return Expr::unary(k, a);
}

}  // namespace

Expr sin(const Expr& a) { return fold_or_make(Kind::Sin, a); }
Expr cos(const Expr& a) { return fold_or_make(Kind::Cos, a); }
Expr exp(const Expr& a) { return fold_or_make(Kind::Exp, a); }
Expr log(const Expr& a) { return fold_or_make(Kind::Log, a); }
Expr sqrt(const Expr& a) { return fold_or_make(Kind::Sqrt, a); }

Expr pow(const Expr& base, double exponent) {
  if (exponent == 1.0) return base;
  if (exponent == 0.0) return Expr(1.0);
  double folded;
  if (base.is_constant() &&
      try_fold_unary(Kind::Pow, base.value(), exponent, folded)) {
    return Expr(folded);
  }
  return Expr::power(base, exponent);
}

// ---------------------------------------------------------------- structure

bool structurally_equal(const Expr& a, const Expr& b) noexcept {
  if (a.size() != b.size() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Constant:
      return a.value() == b.value() &&
             std::signbit(a.value()) == std::signbit(b.value());
    case Kind::Variable:
      return a.index() == b.index();
    case Kind::Pow:
      return a.value() == b.value() && structurally_equal(a.lhs(), b.lhs());
    default:
      break;
  }
  if (is_binary(a.kind())) {
    return structurally_equal(a.lhs(), b.lhs()) &&
           structurally_equal(a.rhs(), b.rhs());
  }
  return structurally_equal(a.lhs(), b.lhs());
}

namespace {

Expr rebuild_unary(Kind k, const Expr& arg, double exponent) {
  switch (k) {
    case Kind::Negate:
      return -arg;
    case Kind::Sin:
      return sin(arg);
    case Kind::Cos:
      return cos(arg);
    case Kind::Exp:
      return exp(arg);
    case Kind::Log:
      return log(arg);
    case Kind::Sqrt:
      return sqrt(arg);
    case Kind::Pow:
      return pow(arg, exponent);
    default:
      break;
  }
  throw ContextError("bad unary node");
}

Expr rebuild_binary(Kind k, const Expr& a, const Expr& b) {
  switch (k) {
    case Kind::Add:
      return a + b;
    case Kind::Sub:
      return a - b;
    case Kind::Mul:
      return a * b;
    case Kind::Div:
      return a / b;
    default:
      break;
  }
  throw ContextError("bad binary node");
}

}  // namespace

Expr simplify(const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant:
    case Kind::Variable:
      return e;
    default:
      break;
  }
  if (is_binary(e.kind())) {
    return rebuild_binary(e.kind(), simplify(e.lhs()), simplify(e.rhs()));
  }
  return rebuild_unary(e.kind(), simplify(e.lhs()), e.value());
}

Expr partial(const Expr& e, std::size_t var) {
  if (e.arity() <= var) return Expr(0.0);
  const Expr& u = e.lhs();
  switch (e.kind()) {
    case Kind::Constant:
      return Expr(0.0);
    case Kind::Variable:
      return Expr(e.index() == var ? 1.0 : 0.0);
    case Kind::Negate:
      return -partial(u, var);
    case Kind::Sin:
      return cos(u) * partial(u, var);
    case Kind::Cos:
      return -(sin(u) * partial(u, var));
    case Kind::Exp:
      return e * partial(u, var);
    case Kind::Log:
      return partial(u, var) / u;
    case Kind::Sqrt:
      return partial(u, var) / (Expr(2.0) * e);
    case Kind::Pow: {
      const Expr du = partial(u, var);
      if (du.is_constant(0.0)) return Expr(0.0);
      return Expr(e.value()) * pow(u, e.value() - 1.0) * du;
    }
    case Kind::Add:
      return partial(u, var) + partial(e.rhs(), var);
    case Kind::Sub:
      return partial(u, var) - partial(e.rhs(), var);
    case Kind::Mul: {
      const Expr& v = e.rhs();
      return partial(u, var) * v + u * partial(v, var);
    }
    case Kind::Div: {
      const Expr& v = e.rhs();
      const Expr du = partial(u, var);
      const Expr dv = partial(v, var);
      if (dv.is_constant(0.0)) return du / v;
      return (du * v - u * dv) / pow(v, 2.0);
    }
  }
  return Expr(0.0);
}

Expr partial(const Expr& e, const Variables& vars, std::string_view name) {
  return partial(e, vars.index_of(name));
}

Expr substitute(const Expr& e, std::span<const Expr> replacements) {
  switch (e.kind()) {
    case Kind::Constant:
      return e;
    case Kind::Variable:
      if (e.index() >= replacements.size()) {
        throw ContextError("substitute: variable index out of range");
      }
      return replacements[e.index()];
    default:
      break;
  }
  if (is_binary(e.kind())) {
    return rebuild_binary(e.kind(), substitute(e.lhs(), replacements),
                          substitute(e.rhs(), replacements));
  }
  return rebuild_unary(e.kind(), substitute(e.lhs(), replacements), e.value());
}

// ----------------------------------------------------------------- printing

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v == 0.0 ? 0.0 : v);
  return std::string(buf, res.ptr);
}

namespace {

constexpr int kSum = 1;
constexpr int kProduct = 2;
constexpr int kUnary = 3;
constexpr int kPower = 4;
constexpr int kAtom = 5;

int precedence(const Expr& e) {
  switch (e.kind()) {
    case Kind::Constant:
      return std::signbit(e.value()) ? kUnary : kAtom;
    case Kind::Add:
    case Kind::Sub:
      return kSum;
    case Kind::Mul:
    case Kind::Div:
      return kProduct;
    case Kind::Negate:
      return kUnary;
    case Kind::Pow:
      return kPower;
    default:
      return kAtom;
  }
}

const char* function_name(Kind k) {
  switch (k) {
    case Kind::Sin:
      return "sin";
    case Kind::Cos:
      return "cos";
    case Kind::Exp:
      return "exp";
    case Kind::Log:
      return "log";
    case Kind::Sqrt:
      return "sqrt";
    default:
      return "?";
  }
}

void print(const Expr& e, const Variables& vars, std::string& out);

void print_at(const Expr& e, const Variables& vars, int min_level,
              std::string& out) {
  if (precedence(e) < min_level) {
    out += '(';
    print(e, vars, out);
    out += ')';
  } else {
    print(e, vars, out);
  }
}

void print(const Expr& e, const Variables& vars, std::string& out) {
  switch (e.kind()) {
    case Kind::Constant:
      out += format_number(e.value());
      return;
    case Kind::Variable:
      if (e.index() < vars.size()) {
        out += vars[e.index()];
      } else {
        out += "$" + std::to_string(e.index());
      }
      return;
    case Kind::Negate:
      out += '-';
      print_at(e.lhs(), vars, kUnary, out);
      return;
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Exp:
    case Kind::Log:
    case Kind::Sqrt:
      out += function_name(e.kind());
      out += '(';
      print(e.lhs(), vars, out);
      out += ')';
      return;
    case Kind::Pow:
      print_at(e.lhs(), vars, kAtom, out);
      out += '^';
      if (std::signbit(e.value())) {
        out += '(' + format_number(e.value()) + ')';
      } else {
        out += format_number(e.value());
      }
      return;
    case Kind::Add:
      print_at(e.lhs(), vars, kSum, out);
      out += " + ";
      print_at(e.rhs(), vars, kSum + 1, out);
      return;
    case Kind::Sub:
      print_at(e.lhs(), vars, kSum, out);
      out += " - ";
      print_at(e.rhs(), vars, kSum + 1, out);
      return;
    case Kind::Mul:
      print_at(e.lhs(), vars, kProduct, out);
      out += '*';
      print_at(e.rhs(), vars, kProduct + 1, out);
      return;
    case Kind::Div:
      print_at(e.lhs(), vars, kProduct, out);
      out += '/';
      print_at(e.rhs(), vars, kProduct + 1, out);
      return;
  }
}

}  // namespace

std::string to_string(const Expr& e, const Variables& vars) {
  std::string out;
  print(e, vars, out);
  return out;
}

}  // namespace cartan
