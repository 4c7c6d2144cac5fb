#pragma once

// Differential p-forms with expression coefficients, and the operators of
// the exterior calculus acting on them: wedge, exterior derivative,
// interior product, Lie derivative and pullback.
//
// A form stores a sparse map from strictly increasing index tuples to
// coefficients. Equality of forms is semantic (decided by sampling), never
// structural: identically-zero coefficients may or may not be present.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cartan/expr.hpp"
#include "cartan/sampling.hpp"

namespace cartan {

/// Strictly increasing variable indices of a basis element dx^i1 ∧ ... ∧ dx^ip.
using IndexTuple = std::vector<int>;

class Form {
 public:
  using Terms = std::map<IndexTuple, Expr>;

  /// The zero form of degree `degree` over `vars`.
  Form(Variables vars, int degree);

  static Form scalar(Variables vars, Expr value);
  /// Σ coeffs[i] dx^i; `coeffs.size()` must equal `vars.size()`.
  static Form one_form(Variables vars, const std::vector<Expr>& coeffs);
  /// coeff · dx^indices[0] ∧ ...; indices in any order (sign is applied,
  /// repeated indices give the zero form).
  static Form monomial(Variables vars, IndexTuple indices, Expr coeff = 1.0);

  const Variables& variables() const noexcept { return vars_; }
  std::size_t dimension() const noexcept { return vars_.size(); }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }

  /// Coefficient of the given strictly increasing tuple (0 when absent).
  Expr coefficient(const IndexTuple& indices) const;
  /// Adds `coeff` to the coefficient of a strictly increasing tuple.
  void add_term(const IndexTuple& indices, const Expr& coeff);

  /// Set on the zero form that stands in for a derivative or product whose
  /// degree would exceed the dimension. Such a form is always zero.
  bool exceeds_top() const noexcept { return exceeds_top_; }
  static Form top_exceeded(Variables vars);

  /// Drops coefficients that simplified to the constant 0.
  Form pruned() const;

  /// Coefficients at a point, one entry per stored term.
  std::map<IndexTuple, double> eval(std::span<const double> point) const;

  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator-(const Form& a);
  friend Form operator*(const Expr& f, const Form& a);

 private:
  Variables vars_;
  int degree_;
  Terms terms_;
  bool exceeds_top_ = false;
};

/// Renders `a` as "c1 dx∧dy + c2 dx∧dz" in sorted basis order.
std::string to_string(const Form& a);

class VectorField {
 public:
  VectorField(Variables vars, std::vector<Expr> components);

  const Variables& variables() const noexcept { return vars_; }
  std::size_t dimension() const noexcept { return components_.size(); }
  const Expr& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Expr>& components() const noexcept { return components_; }

 private:
  Variables vars_;
  std::vector<Expr> components_;
};

/// Map from `source` coordinates to `target` coordinates, one component
/// expression (over the source variables) per target variable.
class SmoothMap {
 public:
  SmoothMap(Variables source, Variables target, std::vector<Expr> components);

  const Variables& source() const noexcept { return source_; }
  const Variables& target() const noexcept { return target_; }
  const std::vector<Expr>& components() const noexcept { return components_; }

 private:
  Variables source_;
  Variables target_;
  std::vector<Expr> components_;
};

/// Exterior product. When deg(a)+deg(b) exceeds the dimension the result
/// is the top-exceeded zero form. Throws ContextError on mismatched
/// variable lists.
Form wedge(const Form& a, const Form& b);

/// Exterior derivative; top-degree input yields Form::top_exceeded.
Form ext_d(const Form& a);

/// Contraction into the first slot:
/// i(V)(dx^i1∧…∧dx^ip) = Σ_k (−1)^(k−1) V^ik dx^i1∧…(omit k)…∧dx^ip.
/// Throws ContextError for 0-forms.
Form interior(const VectorField& v, const Form& a);

/// L_V a = i(V) da + d i(V) a; on 0-forms this is V·grad a.
Form lie(const VectorField& v, const Form& a);

/// Functional substitution m*a. `a` must live over `m.target()`.
Form pullback(const SmoothMap& m, const Form& a);

/// Zero test applied to every coefficient with the same sample set. The
/// witness (if any) belongs to the first nonzero coefficient.
struct FormZeroVerdict {
  bool zero = true;
  IndexTuple component;
  ZeroVerdict detail;

  explicit operator bool() const noexcept { return zero; }
};
FormZeroVerdict form_is_zero(const Form& a, const SampleBox& box,
                             const TolerancePolicy& pol);

/// Largest |coefficient| over the admissible sample points (points where a
/// coefficient fails to evaluate, or that `pol` excludes, are skipped).
double sampled_max_abs(const Form& a, const SampleBox& box,
                       const TolerancePolicy& pol = {});

/// Sign of the permutation sorting `indices`, or 0 when an index repeats.
/// On return `indices` is sorted.
int sort_with_sign(IndexTuple& indices);

}  // namespace cartan
