#include "cartan/pfaff.hpp"

#include <cmath>

#include "cartan/error.hpp"
#include "cartan/vector_calculus.hpp"

namespace cartan {

int PfaffSequence::dimension() const noexcept {
  int dim = 0;
  for (const PfaffElement& e : elements) {
    if (!e.nonvanishing) break;
    ++dim;
  }
  return dim;
}

PfaffSequence pfaff_sequence(const Form& a, const SampleBox& box,
                             const TolerancePolicy& pol) {
  if (a.degree() != 1) {
    throw ContextError("pfaff_sequence: expected a 1-form");
  }
  const std::size_t n = a.dimension();
  PfaffSequence seq;
  Form current = a;
  for (std::size_t k = 0;; ++k) {
    FormZeroVerdict verdict = form_is_zero(current, box, pol);
    const bool nonvanishing = !verdict.zero;
    seq.elements.push_back(
        {ladder_label(k), current, nonvanishing, std::move(verdict)});
    if (!nonvanishing || k + 1 >= n) break;
    // Odd positions are derivatives of their predecessor, even positions
    // are A wedged onto it.
    current = (k % 2 == 0) ? ext_d(current) : wedge(a, current);
  }
  return seq;
}

std::vector<std::optional<int>> pointwise_dimension(const PfaffSequence& seq,
                                                    const SampleBox& box,
                                                    const TolerancePolicy& pol) {
  std::vector<std::optional<int>> out;
  out.reserve(box.samples());
  for (const auto& p : box.points()) {
    if (pol.excludes(p)) {
      out.emplace_back();
      continue;
    }
    std::optional<int> dim = 0;
    for (std::size_t k = 0; k < seq.elements.size() && dim; ++k) {
      for (const auto& [idx, c] : seq.elements[k].form.terms()) {
        try {
          const Expr::Scaled v = c.eval_scaled(p);
          if (std::abs(v.value) > pol.abs + pol.rel * v.scale) {
            dim = static_cast<int>(k) + 1;
            break;
          }
        } catch (const EvalError&) {
          dim.reset();
          break;
        }
      }
    }
    out.push_back(dim);
  }
  return out;
}

namespace {

void require_spacetime_one_form(const Form& a, const char* op) {
  if (a.dimension() != 4 || a.degree() != 1) {
    throw ContextError(std::string(op) +
                       ": expected a 1-form over four variables (x, y, z, t)");
  }
}

}  // namespace

TorsionCurrent torsion_current(const Form& a) {
  require_spacetime_one_form(a, "torsion_current");
  const Vec3 vec{a.coefficient({0}), a.coefficient({1}), a.coefficient({2})};
  const Expr phi = -a.coefficient({3});
  const Vec3 b = curl(vec);
  const Vec3 e = Vec3{Expr(0.0), Expr(0.0), Expr(0.0)} - d_dt(vec) - grad(phi);
  return {cross(e, vec) + phi * b, dot(vec, b)};
}

TorsionCurrent torsion_from_three_form(const Form& h3) {
  if (h3.dimension() != 4 || h3.degree() != 3) {
    throw ContextError("torsion_from_three_form: expected a 3-form over four "
                       "variables");
  }
  return {{-h3.coefficient({1, 2, 3}), h3.coefficient({0, 2, 3}),
           -h3.coefficient({0, 1, 3})},
          h3.coefficient({0, 1, 2})};
}

FiniteTopology build_cartan_topology(const PfaffSequence& seq) {
  const int dim = seq.dimension();
  if (dim == 0) {
    throw ContextError("build_cartan_topology: no nonvanishing element");
  }
  return cartan_topology(static_cast<std::size_t>(dim));
}

PfaffReport analyze_pfaff(const Form& a, const SampleBox& box,
                          const TolerancePolicy& pol) {
  PfaffReport report;
  report.sequence = pfaff_sequence(a, box, pol);
  report.dimension = report.sequence.dimension();
  report.pointwise = pointwise_dimension(report.sequence, box, pol);
  if (a.dimension() == 4) {
    report.torsion = torsion_current(a);
    const Form f = ext_d(a);
    report.parity = wedge(f, f).coefficient({0, 1, 2, 3});
  }
  report.connected =
      report.dimension == 0 || is_connected(build_cartan_topology(report.sequence));
  return report;
}

}  // namespace cartan
