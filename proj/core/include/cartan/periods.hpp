#pragma once

// Period integrals over closed parametric curves, and the closed currents
// built from signed Hölder-norm powers.

#include <optional>
#include <string>
#include <vector>

#include "cartan/expr.hpp"
#include "cartan/form.hpp"
#include "cartan/quadrature.hpp"

namespace cartan {

/// A closed curve t ↦ (c_1(t), …, c_n(t)), t ∈ [0, period].
class ClosedCurve {
 public:
  /// Components are expressions in the single variable `parameter`.
  /// Derivatives default to symbolic differentiation. Throws ContextError
  /// when the curve does not close to 1e-9.
  ClosedCurve(std::string parameter, double period,
              std::vector<Expr> components,
              std::optional<std::vector<Expr>> derivatives = std::nullopt);

  const std::string& parameter() const noexcept { return parameter_; }
  /// The one-variable list {parameter}.
  const Variables& parameter_variables() const noexcept { return pvars_; }
  double period() const noexcept { return period_; }
  std::size_t dimension() const noexcept { return components_.size(); }
  const std::vector<Expr>& components() const noexcept { return components_; }
  const std::vector<Expr>& derivatives() const noexcept { return derivatives_; }

  std::vector<double> position(double t) const;
  std::vector<double> velocity(double t) const;

  /// The same curve traversed backwards, t ↦ c(period − t).
  ClosedCurve reversed() const;
  /// t ↦ c(g(t)); `g` must map [0, period] monotonically onto itself.
  ClosedCurve reparameterized(const Expr& g) const;

 private:
  std::string parameter_;
  Variables pvars_;
  double period_;
  std::vector<Expr> components_;
  std::vector<Expr> derivatives_;
};

/// λ = (Σ s_i (V^i)^p)^(n/p). Integer p keeps the sign of each term; other
/// exponents need positive bases.
struct SignatureSpec {
  std::vector<int> signs;  // ±1, one per component
  double p = 2.0;

  static SignatureSpec elliptic(std::size_t n, double p = 2.0);
  /// Throws ContextError unless the signs are ±1, at least one is +1, there
  /// are `n` of them and p >= 1.
  void validate(std::size_t n) const;
  /// Σ s_i (V^i)^p.
  Expr base(const std::vector<Expr>& v) const;
  /// base(v)^(n/p), n = v.size().
  Expr lambda(const std::vector<Expr>& v) const;
  double base(const std::vector<double>& v) const;
};

/// ∮ a over one period. Throws SingularityError (where = {t}) when the
/// pulled-back integrand is not finite at a node.
QuadratureResult circulate(const Form& a, const ClosedCurve& c,
                           const QuadratureSpec& q);

/// (Φ dΨ − Ψ dΦ) / (s_1 Φ^p + s_2 Ψ^p)^(2/p).
Form clebsch_form(const Variables& vars, const Expr& phi, const Expr& psi,
                  const SignatureSpec& sig);
QuadratureResult clebsch_circulation(const Variables& vars, const Expr& phi,
                                     const Expr& psi, const SignatureSpec& sig,
                                     const ClosedCurve& c,
                                     const QuadratureSpec& q);

inline constexpr double kMinCurveDistance = 1e-6;

/// (1/4π) ∮∮ z·(V_1×V_2) / λ(z) dt dt′ with z = R_2 − R_1 and λ from `sig`
/// (|z|³ for the elliptic p = 2 signature). Throws SingularityError with
/// where = {t, t′, distance} when the node grids come within
/// kMinCurveDistance of each other or the integrand is not finite.
QuadratureResult gauss_linking(const ClosedCurve& c1, const ClosedCurve& c2,
                               const QuadratureSpec& q,
                               const SignatureSpec& sig = SignatureSpec::elliptic(3));

struct BraidResult {
  QuadratureResult integral;
  /// ∭ |integrand|, the scale against which the integral is judged.
  double l1 = 0.0;
};

/// ∭ (E/c) det[∂P/∂t, ∂P/∂t′, ∂P/∂t″] / λ dt dt′ dt″ with P = p_1 + p_2 + p_3
/// and λ = (s_1 P_x^p + s_2 P_y^p + s_3 P_z^p + s_4 (E/c)^p)^(4/p).
/// Curves that share a parameter name share an integration variable, so a
/// synchronized pair contributes one column and leaves another empty. Throws
/// SingularityError when |λ| < kMinCurveDistance at a node.
BraidResult braid_integral(const ClosedCurve& p1, const ClosedCurve& p2,
                           const ClosedCurve& p3, double e_over_c,
                           const QuadratureSpec& q,
                           const SignatureSpec& sig = SignatureSpec::elliptic(4));

/// i(Y)Ω pulled back along V, where Ω = dV^1∧…∧dV^n / λ(V) and Y = V^i ∂/∂V^i.
/// Throws ContextError when λ vanishes at every probe point.
Form holder_current(const VectorField& v, const SignatureSpec& sig);

/// adj(∂V/∂x) · V / λ(V).
VectorField cofactor_adjoint_current(const VectorField& v,
                                     const SignatureSpec& sig);

/// Σ ∂W^i/∂x^i.
Expr divergence(const VectorField& w);

}  // namespace cartan
