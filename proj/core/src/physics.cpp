#include "cartan/physics.hpp"

#include "cartan/error.hpp"

namespace cartan {

namespace {

const Vec3 kZero{Expr(0.0), Expr(0.0), Expr(0.0)};

void require_spacetime(const Variables& vars, const char* op) {
  if (vars.size() != 4) {
    throw ContextError(std::string(op) +
                       ": expected four variables (x, y, z, t)");
  }
}

// Σ B-part + E-part with the F layout used throughout this file.
Form field_form(const Variables& vars, const Vec3& e, const Vec3& b) {
  Form f = Form::monomial(vars, {0, 1}, b[2]);
  f += Form::monomial(vars, {1, 2}, b[0]);
  f += Form::monomial(vars, {2, 0}, b[1]);
  for (int i = 0; i < 3; ++i) f += Form::monomial(vars, {i, 3}, e[static_cast<std::size_t>(i)]);
  return f.pruned();
}

}  // namespace

Form EMPotentials::action() const {
  require_spacetime(vars, "EMPotentials");
  return Form::one_form(vars, {A[0], A[1], A[2], -phi});
}

EMFields em_fields(const EMPotentials& p) {
  const Form f = ext_d(p.action());
  return {{f.coefficient({0, 3}), f.coefficient({1, 3}), f.coefficient({2, 3})},
          {f.coefficient({1, 2}), -f.coefficient({0, 2}), f.coefficient({0, 1})}};
}

FaradayResidual maxwell_faraday_residual(const EMFields& f) {
  return {curl(f.E) + d_dt(f.B), div(f.B)};
}

FaradayResidual maxwell_faraday_residual(const EMPotentials& p) {
  return maxwell_faraday_residual(em_fields(p));
}

Form excitation_form(const Variables& vars, const Vec3& D, const Vec3& H) {
  require_spacetime(vars, "excitation_form");
  Form g = Form::monomial(vars, {1, 2}, -D[0]);
  g += Form::monomial(vars, {2, 0}, -D[1]);
  g += Form::monomial(vars, {0, 1}, -D[2]);
  for (int i = 0; i < 3; ++i) g += Form::monomial(vars, {i, 3}, H[static_cast<std::size_t>(i)]);
  return g.pruned();
}

ChargeCurrent charge_current(const Form& G) {
  if (G.dimension() != 4 || G.degree() != 2) {
    throw ContextError("charge_current: expected a 2-form over (x, y, z, t)");
  }
  Form j = ext_d(G);
  Vec3 current{j.coefficient({1, 2, 3}), -j.coefficient({0, 2, 3}),
               j.coefficient({0, 1, 3})};
  Expr rho = -j.coefficient({0, 1, 2});
  return {std::move(j), std::move(current), std::move(rho)};
}

Expr continuity_anomaly(const Variables& vars, const Expr& rho, const Vec3& v) {
  require_spacetime(vars, "continuity_anomaly");
  Form c(vars, 3);
  c.add_term({1, 2, 3}, rho * v[0]);
  c.add_term({0, 2, 3}, -(rho * v[1]));
  c.add_term({0, 1, 3}, rho * v[2]);
  c.add_term({0, 1, 2}, -rho);
  return ext_d(c).coefficient({0, 1, 2, 3});
}

const char* to_string(ProcessClass c) {
  switch (c) {
    case ProcessClass::Extremal:
      return "Extremal";
    case ProcessClass::BernoulliCasimir:
      return "BernoulliCasimir";
    case ProcessClass::SymplecticClosed:
      return "SymplecticClosed";
    case ProcessClass::NonUniform:
      return "NonUniform";
  }
  return "?";
}

ProcessClass classify_process(const VectorField& v4, const Form& a,
                              const SampleBox& box, const TolerancePolicy& pol,
                              const std::optional<Expr>& theta) {
  if (a.degree() != 1) throw ContextError("classify_process: expected a 1-form");
  const Form w = interior(v4, ext_d(a));
  if (form_is_zero(w, box, pol)) return ProcessClass::Extremal;
  if (theta) {
    const Form mismatch = ext_d(Form::scalar(a.variables(), *theta)) - w;
    if (form_is_zero(mismatch, box, pol)) return ProcessClass::BernoulliCasimir;
  }
  if (form_is_zero(ext_d(w), box, pol)) return ProcessClass::SymplecticClosed;
  return ProcessClass::NonUniform;
}

MasterResiduals master_residuals(const EMPotentials& p, const Vec3& v) {
  const EMFields f = em_fields(p);
  const Vec3 u = f.E + cross(v, f.B);
  return {curl(u), d_dt(u) + grad(dot(f.E, v))};
}

Form FluidState::action() const {
  require_spacetime(vars, "FluidState");
  return Form::one_form(vars, {v[0], v[1], v[2], -(dot(v, v) / Expr(2.0) + psi)});
}

VectorField FluidState::flow() const {
  return VectorField(vars, {v[0], v[1], v[2], Expr(1.0)});
}

Vec3 FluidState::vorticity() const { return curl(v); }

Vec3 euler_residual(const FluidState& f) {
  const Form w = interior(f.flow(), ext_d(f.action()));
  return {w.coefficient({0}), w.coefficient({1}), w.coefficient({2})};
}

Vec3 helmholtz_residual(const FluidState& f) {
  const Vec3 omega = f.vorticity();
  return curl(cross(f.v, omega)) - d_dt(omega);
}

Expr ns_parity(const FluidState& f) {
  if (f.nu == 0.0) return Expr(0.0);
  const Vec3 omega = f.vorticity();
  return Expr(-2.0 * f.nu) * dot(omega, curl(omega));
}

Form viscous_field_form(const FluidState& f) {
  require_spacetime(f.vars, "viscous_field_form");
  const Vec3 omega = f.vorticity();
  const Vec3 e = kZero - cross(f.v, omega) - Expr(f.nu) * curl(omega);
  return field_form(f.vars, e, omega);
}

Expr ns_parity_from_forms(const FluidState& f) {
  const Form fv = viscous_field_form(f);
  return wedge(fv, fv).coefficient({0, 1, 2, 3});
}

NavierStokesResidual ns_residual(const FluidState& f) {
  const Vec3 omega = f.vorticity();
  Vec3 m = d_dt(f.v) + grad(dot(f.v, f.v) / Expr(2.0)) - cross(f.v, omega) +
           grad(f.psi);
  if (f.nu != 0.0) m = m - Expr(f.nu) * vector_laplacian(f.v);
  return {m, div(f.v)};
}

HelicityDiagnostics helicity_diagnostics(const FluidState& f,
                                         const SampleBox& box,
                                         const TolerancePolicy& pol) {
  const Vec3 omega = f.vorticity();
  Expr h = dot(f.v, omega);
  Vec3 t = h * f.v - (dot(f.v, f.v) / Expr(2.0) - f.psi) * omega;
  Expr conservation = div(t) + partial(h, kTime);
  const Form field = f.nu == 0.0 ? ext_d(f.action()) : viscous_field_form(f);
  FormZeroVerdict dh = form_is_zero(wedge(field, field), box, pol);
  return {std::move(h), std::move(t), std::move(conservation), std::move(dh)};
}

}  // namespace cartan
