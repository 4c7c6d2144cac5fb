#pragma once

// Composite Newton-Cotes rules with Richardson refinement tables.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace cartan {

enum class QuadratureRule { Trapezoid, Simpson };

const char* to_string(QuadratureRule r);

struct QuadratureSpec {
  QuadratureRule rule = QuadratureRule::Simpson;
  std::size_t panels = 64;       // per dimension, at the coarsest level
  std::size_t refinements = 0;   // extra levels, each doubling the panels
  double tol = 1e-10;            // convergence tolerance between levels

  /// Throws ContextError unless panels >= 8 (and even for Simpson).
  void validate() const;
  /// Algebraic order of the rule (2 or 4).
  int order() const noexcept;
};

/// Nodes a, a+h, ..., b and their composite weights.
struct NodeSet {
  std::vector<double> nodes;
  std::vector<double> weights;
};
NodeSet composite_nodes(QuadratureRule rule, std::size_t panels, double a,
                        double b);

struct RefinementRow {
  std::size_t panels;
  double value;
  std::optional<double> extrapolated;  // absent on the first row
};

struct QuadratureResult {
  double value = 0.0;
  /// |difference| between the last two levels; absent without refinement.
  std::optional<double> error;
  bool converged = false;
  std::vector<RefinementRow> table;
};

/// Evaluates `level(panels)` at panels * 2^k for k = 0..refinements.
/// When the last two raw values agree within `tol` the finest raw value is
/// returned; otherwise the Richardson-extrapolated one.
QuadratureResult refine(const QuadratureSpec& q,
                        const std::function<double(std::size_t)>& level);

/// One-dimensional integral of `f` over [a, b].
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureSpec& q);

}  // namespace cartan
