#pragma once

// Scalar expressions over an ordered list of named real variables.
//
// Expressions are immutable trees shared through reference counting, so
// copies are cheap and values may be handed between threads freely.
// Variables are stored by position; the names live in a `Variables` list
// that travels alongside the expression (forms, vector fields and maps all
// carry one).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cartan {

/// Ordered, duplicate-free list of variable names. Equality compares names.
class Variables {
 public:
  Variables() = default;
  Variables(std::initializer_list<std::string> names);
  explicit Variables(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_ ? names_->size() : 0; }
  bool empty() const noexcept { return size() == 0; }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  std::span<const std::string> names() const noexcept;

  /// Position of `name`, or throws ContextError.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const noexcept;

  friend bool operator==(const Variables& a, const Variables& b) noexcept;

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

class Expr {
 public:
  enum class Kind : std::uint8_t {
    Constant,
    Variable,
    Negate,
    Sin,
    Cos,
    Exp,
    Log,
    Sqrt,
    Add,
    Sub,
    Mul,
    Div,
    Pow,  // base ^ constant exponent
  };

  /// The constant 0.
  Expr();
  Expr(double value);  // NOLINT(google-explicit-constructor)

  static Expr constant(double value);
  static Expr variable(std::size_t index);
  /// Unary node without any simplification.
  static Expr unary(Kind kind, Expr arg);
  /// Binary node without any simplification. `kind` must not be Pow.
  static Expr binary(Kind kind, Expr lhs, Expr rhs);
  /// `base ^ exponent` without simplification.
  static Expr power(Expr base, double exponent);

  Kind kind() const noexcept;
  /// Constant value, or the exponent of a Pow node.
  double value() const noexcept;
  /// Variable position (Variable nodes only).
  std::size_t index() const noexcept;
  /// Operand of a unary node, left operand of a binary node, base of Pow.
  const Expr& lhs() const noexcept;
  /// Right operand of a binary node.
  const Expr& rhs() const noexcept;

  bool is_constant() const noexcept { return kind() == Kind::Constant; }
  bool is_constant(double v) const noexcept {
    return is_constant() && value() == v;
  }

  /// Evaluates at `point` (one coordinate per variable). Throws EvalError
  /// on division by zero, log of a non-positive number, sqrt of a negative
  /// number, a non-integer power of a non-positive base, or a non-finite
  /// intermediate result.
  double eval(std::span<const double> point) const;

  struct Scaled {
    double value;
    double scale;  // max |subterm| encountered
  };
  /// Like eval, also returns the largest absolute value of any subterm.
  Scaled eval_scaled(std::span<const double> point) const;

  /// Number of nodes in the tree.
  std::size_t size() const noexcept;
  /// Largest variable index referenced plus one (0 for closed terms).
  std::size_t arity() const noexcept;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Smart constructors: fold constants and apply the 0/1 identities.
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
Expr exp(const Expr& a);
Expr log(const Expr& a);
Expr sqrt(const Expr& a);
Expr pow(const Expr& base, double exponent);

/// Tree identity (constants compared bitwise-equal as doubles).
bool structurally_equal(const Expr& a, const Expr& b) noexcept;

/// Bottom-up constant folding plus x+0, x*1, x*0, x-x, x/1, --x, x^1, x^0.
Expr simplify(const Expr& e);

/// Exact symbolic partial derivative with respect to variable `var`,
/// simplified.
Expr partial(const Expr& e, std::size_t var);
/// Convenience overload looking `name` up in `vars`.
Expr partial(const Expr& e, const Variables& vars, std::string_view name);

/// Replaces variable i by replacements[i]. Every referenced index must be
/// covered.
Expr substitute(const Expr& e, std::span<const Expr> replacements);

/// Renders `e` in the parse grammar with the minimal parentheses needed to
/// re-parse to the same tree.
std::string to_string(const Expr& e, const Variables& vars);

/// Parses the expression grammar: decimal/scientific numbers, variables from
/// `vars`, `+ - * / ^`, unary minus, parentheses and the functions sin, cos,
/// exp, log, sqrt. The name `pi` is a constant unless it is a variable.
/// `^` is right-associative, binds tighter than unary minus on its base and
/// requires a constant exponent. Throws ParseError with a byte offset.
Expr parse_expr(std::string_view text, const Variables& vars);

/// Shortest round-trip decimal rendering of a double.
std::string format_number(double v);

}  // namespace cartan
