#include "cartan/quadrature.hpp"

#include <cmath>

#include "cartan/error.hpp"

namespace cartan {

const char* to_string(QuadratureRule r) {
  return r == QuadratureRule::Simpson ? "simpson" : "trapezoid";
}

void QuadratureSpec::validate() const {
  if (panels < 8) throw ContextError("quadrature: panels must be >= 8");
  if (rule == QuadratureRule::Simpson && panels % 2 != 0) {
    throw ContextError("quadrature: Simpson's rule needs an even panel count");
  }
  if (!(tol >= 0.0)) throw ContextError("quadrature: tolerance must be >= 0");
}

int QuadratureSpec::order() const noexcept {
  return rule == QuadratureRule::Simpson ? 4 : 2;
}

NodeSet composite_nodes(QuadratureRule rule, std::size_t panels, double a,
                        double b) {
  NodeSet s;
  s.nodes.resize(panels + 1);
  s.weights.resize(panels + 1);
  const double h = (b - a) / static_cast<double>(panels);
  for (std::size_t i = 0; i <= panels; ++i) {
    s.nodes[i] = a + h * static_cast<double>(i);
    double w = 1.0;
    if (i == 0 || i == panels) {
      w = rule == QuadratureRule::Simpson ? 1.0 / 3.0 : 0.5;
    } else if (rule == QuadratureRule::Simpson) {
      w = (i % 2 == 1) ? 4.0 / 3.0 : 2.0 / 3.0;
    }
    s.weights[i] = w * h;
  }
  s.nodes[panels] = b;
  return s;
}

QuadratureResult refine(const QuadratureSpec& q,
                        const std::function<double(std::size_t)>& level) {
  q.validate();
  QuadratureResult r;
  const double factor = std::pow(2.0, q.order()) - 1.0;
  std::size_t panels = q.panels;
  for (std::size_t k = 0; k <= q.refinements; ++k, panels *= 2) {
    RefinementRow row{panels, level(panels), std::nullopt};
    if (!r.table.empty()) {
      const double prev = r.table.back().value;
      row.extrapolated = row.value + (row.value - prev) / factor;
    }
    r.table.push_back(row);
  }
  const RefinementRow& last = r.table.back();
  r.value = last.value;
  if (r.table.size() >= 2) {
    const double diff = std::abs(last.value - r.table[r.table.size() - 2].value);
    r.converged = diff <= q.tol;
    if (!r.converged) r.value = *last.extrapolated;
    r.error = diff;
  }
  return r;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureSpec& q) {
  return refine(q, [&](std::size_t panels) {
    const NodeSet s = composite_nodes(q.rule, panels, a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
      sum += s.weights[i] * f(s.nodes[i]);
    }
    return sum;
  });
}

}  // namespace cartan
