#pragma once

// Electromagnetic and hydrodynamic fixtures built on the exterior calculus.
// Every routine works over the variable list (x, y, z, t) by position:
// indices 0..2 are spatial, index 3 is time.

#include <array>
#include <optional>

#include "cartan/form.hpp"
#include "cartan/pfaff.hpp"
#include "cartan/sampling.hpp"
#include "cartan/vector_calculus.hpp"

namespace cartan {

/// Vector potential A and scalar potential φ; the action 1-form is
/// A·dr − φ dt.
struct EMPotentials {
  Variables vars;  // four variables (x, y, z, t)
  Vec3 A;
  Expr phi;

  Form action() const;
};

struct EMFields {
  Vec3 E;
  Vec3 B;
};

/// E and B read off F = dA:
/// F = B_z dx∧dy + B_x dy∧dz + B_y dz∧dx + E_x dx∧dt + E_y dy∧dt + E_z dz∧dt.
EMFields em_fields(const EMPotentials& p);

struct FaradayResidual {
  Vec3 curl_e_plus_db_dt;
  Expr div_b;
};
FaradayResidual maxwell_faraday_residual(const EMPotentials& p);
/// Same residuals for arbitrary (not necessarily potential-derived) fields.
FaradayResidual maxwell_faraday_residual(const EMFields& f);

/// Excitation 2-form G = −(D^x dy∧dz + D^y dz∧dx + D^z dx∧dy)
///                       + H^x dx∧dt + H^y dy∧dt + H^z dz∧dt.
Form excitation_form(const Variables& vars, const Vec3& D, const Vec3& H);

/// J = dG, written J^x dy∧dz∧dt − J^y dx∧dz∧dt + J^z dx∧dy∧dt − ρ dx∧dy∧dz.
struct ChargeCurrent {
  Form J;
  Vec3 current;
  Expr rho;
};
ChargeCurrent charge_current(const Form& G);

/// div(ρV) + ∂ρ/∂t, read off dC for
/// C = ρ(V^x dy∧dz∧dt − V^y dx∧dz∧dt + V^z dx∧dy∧dt − dx∧dy∧dz).
Expr continuity_anomaly(const Variables& vars, const Expr& rho, const Vec3& v);

enum class ProcessClass { Extremal, BernoulliCasimir, SymplecticClosed, NonUniform };

const char* to_string(ProcessClass c);

/// W = i(V)dA. Extremal when W ≡ 0; BernoulliCasimir when a supplied Θ
/// satisfies dΘ = W; SymplecticClosed when dW ≡ 0; otherwise NonUniform.
ProcessClass classify_process(const VectorField& v4, const Form& a,
                              const SampleBox& box, const TolerancePolicy& pol,
                              const std::optional<Expr>& theta = std::nullopt);

struct MasterResiduals {
  Vec3 r1;  // curl(E + V×B)
  Vec3 r2;  // ∂(E + V×B)/∂t + grad(E·V)
};
MasterResiduals master_residuals(const EMPotentials& p, const Vec3& v);

/// Velocity v, Bernoulli function Ψ (dΨ = dP/ρ) and kinematic viscosity ν.
struct FluidState {
  Variables vars;  // (x, y, z, t)
  Vec3 v;
  Expr psi;
  double nu = 0.0;

  /// A = v·dr − (v·v/2 + Ψ) dt.
  Form action() const;
  /// (v, 1) over (x, y, z, t).
  VectorField flow() const;
  Vec3 vorticity() const;
};

/// Spatial components of i(V)dA for the fluid action: zero iff
/// ∂v/∂t + grad(v·v/2) − v×ω = −grad Ψ.
Vec3 euler_residual(const FluidState& f);

/// curl(v×ω) − ∂ω/∂t.
Vec3 helmholtz_residual(const FluidState& f);

/// −2ν (ω · curl ω), the dx∧dy∧dz∧dt coefficient of the parity 4-form.
Expr ns_parity(const FluidState& f);

/// The field 2-form F_ν forced by the viscous constraint
/// i(V)F = f_k (dx^k − V^k dt) with f = ν curl curl v: magnetic part ω,
/// electric part −v×ω − ν curl curl v.
Form viscous_field_form(const FluidState& f);
/// dx∧dy∧dz∧dt coefficient of F_ν ∧ F_ν.
Expr ns_parity_from_forms(const FluidState& f);

struct NavierStokesResidual {
  /// ∂v/∂t + grad(v·v/2) − v×ω − ν∇²v + grad Ψ, ∇²v = grad div v − curl curl v.
  Vec3 momentum;
  /// div v, reported rather than enforced.
  Expr divergence;
};
NavierStokesResidual ns_residual(const FluidState& f);

struct HelicityDiagnostics {
  Expr h;                   // v·ω
  Vec3 T;                   // (v·ω)v − (v·v/2 − Ψ)ω
  Expr conservation;        // div T + ∂h/∂t
  FormZeroVerdict dH_zero;  // dA∧dA (F_ν∧F_ν when ν > 0)
};
HelicityDiagnostics helicity_diagnostics(const FluidState& f,
                                         const SampleBox& box,
                                         const TolerancePolicy& pol);

}  // namespace cartan
