#pragma once

// Pfaff sequence of a 1-form (A, dA, A∧dA, dA∧dA, ...), Pfaff dimension,
// topological torsion and parity, and the generated Cartan topology.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cartan/form.hpp"
#include "cartan/sampling.hpp"
#include "cartan/topology.hpp"

namespace cartan {

struct PfaffElement {
  std::string label;  // A, F, H, K, E5, ...
  Form form;
  bool nonvanishing;
  FormZeroVerdict verdict;
};

/// Element k has degree k+1. The ladder alternates d and A∧ (F = dA,
/// H = A∧F, K = dH, E5 = A∧K, ...) and stops after the first identically
/// zero element or once the top degree is reached.
struct PfaffSequence {
  std::vector<PfaffElement> elements;

  /// Number of leading nonvanishing elements (0 when A itself vanishes).
  int dimension() const noexcept;
};

PfaffSequence pfaff_sequence(const Form& a, const SampleBox& box,
                             const TolerancePolicy& pol);

/// Per sample point: the largest k such that element k-1 is nonzero at the
/// point, or nullopt where the point is excluded or singular.
std::vector<std::optional<int>> pointwise_dimension(const PfaffSequence& seq,
                                                    const SampleBox& box,
                                                    const TolerancePolicy& pol);

/// Torsion current [T, h] of a 1-form A = A·dr − φ dt over (x, y, z, t):
/// T = E×A + φB, h = A·B with B = curl A, E = −∂A/∂t − grad φ.
struct TorsionCurrent {
  std::array<Expr, 3> T;
  Expr h;
};
TorsionCurrent torsion_current(const Form& a);

/// Reads [T, h] off a 3-form over (x, y, z, t) written as
/// h dx∧dy∧dz − T_z dx∧dy∧dt + T_y dx∧dz∧dt − T_x dy∧dz∧dt,
/// the layout A∧dA has in terms of torsion_current.
TorsionCurrent torsion_from_three_form(const Form& h3);

/// Carrier = labels of the nonvanishing elements; basis and d_map as in
/// cartan_topology. Throws ContextError when no element is nonvanishing.
FiniteTopology build_cartan_topology(const PfaffSequence& seq);

struct PfaffReport {
  PfaffSequence sequence;
  int dimension = 0;
  std::vector<std::optional<int>> pointwise;
  std::optional<TorsionCurrent> torsion;  // N = 4 only
  std::optional<Expr> parity;             // dx∧dy∧dz∧dt coefficient of K, N = 4
  bool connected = true;
};

/// Runs the full pipeline on a 1-form.
PfaffReport analyze_pfaff(const Form& a, const SampleBox& box,
                          const TolerancePolicy& pol);

}  // namespace cartan
