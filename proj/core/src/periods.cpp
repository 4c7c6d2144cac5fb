#include "cartan/periods.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>

#include "cartan/error.hpp"
#include "cartan/sampling.hpp"

namespace cartan {

namespace {

constexpr double kClosureTolerance = 1e-9;

std::vector<double> eval_all(const std::vector<Expr>& es, double t) {
  std::vector<double> out(es.size());
  const std::array<double, 1> p{t};
  for (std::size_t i = 0; i < es.size(); ++i) out[i] = es[i].eval(p);
  return out;
}

std::array<double, 3> cross3(const std::vector<double>& a,
                             const std::vector<double>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

// Position and velocity of a curve at every node of a grid.
struct Sampled {
  std::vector<std::vector<double>> pos;
  std::vector<std::vector<double>> vel;
};

Sampled sample_curve(const ClosedCurve& c, const std::vector<double>& nodes,
                     const char* op) {
  Sampled s;
  s.pos.reserve(nodes.size());
  s.vel.reserve(nodes.size());
  for (double t : nodes) {
    try {
      s.pos.push_back(c.position(t));
      s.vel.push_back(c.velocity(t));
    } catch (const EvalError& e) {
      throw SingularityError(std::string(op) + ": curve not finite (" +
                                 e.what() + ")",
                             {t});
    }
  }
  return s;
}

Expr determinant(const std::vector<std::vector<Expr>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Expr(1.0);
  if (n == 1) return m[0][0];
  Expr det(0.0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Expr>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Expr> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const Expr term = m[0][j] * determinant(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

void require_nonvanishing(const Expr& lambda, std::size_t n, const char* op) {
  const SampleBox probe = SampleBox::cube(n, -1.0, 1.0, 32, 0);
  for (const auto& p : probe.points()) {
    try {
      if (std::abs(lambda.eval(p)) > 1e-12) return;
    } catch (const EvalError&) {
    }
  }
  throw ContextError(std::string(op) + ": λ vanishes identically");
}

}  // namespace

ClosedCurve::ClosedCurve(std::string parameter, double period,
                         std::vector<Expr> components,
                         std::optional<std::vector<Expr>> derivatives)
    : parameter_(std::move(parameter)),
      pvars_({parameter_}),
      period_(period),
      components_(std::move(components)) {
  if (!(period_ > 0.0) || !std::isfinite(period_)) {
    throw ContextError("ClosedCurve: period must be positive");
  }
  if (components_.empty()) throw ContextError("ClosedCurve: no components");
  for (const Expr& c : components_) {
    if (c.arity() > 1) {
      throw ContextError("ClosedCurve: components may only use the parameter");
    }
  }
  if (derivatives) {
    if (derivatives->size() != components_.size()) {
      throw ContextError("ClosedCurve: one derivative per component expected");
    }
    derivatives_ = std::move(*derivatives);
  } else {
    derivatives_.reserve(components_.size());
    for (const Expr& c : components_) derivatives_.push_back(partial(c, 0));
  }
  std::vector<double> start;
  std::vector<double> end;
  try {
    start = position(0.0);
    end = position(period_);
  } catch (const EvalError& e) {
    throw ContextError(std::string("ClosedCurve: endpoint not finite (") +
                       e.what() + ")");
  }
  for (std::size_t i = 0; i < start.size(); ++i) {
    if (std::abs(start[i] - end[i]) > kClosureTolerance) {
      throw ContextError("ClosedCurve: component " + std::to_string(i) +
                         " does not close (c(0) = " + format_number(start[i]) +
                         ", c(L) = " + format_number(end[i]) + ")");
    }
  }
}

std::vector<double> ClosedCurve::position(double t) const {
  return eval_all(components_, t);
}

std::vector<double> ClosedCurve::velocity(double t) const {
  return eval_all(derivatives_, t);
}

ClosedCurve ClosedCurve::reversed() const {
  const std::array<Expr, 1> back{Expr(period_) - Expr::variable(0)};
  std::vector<Expr> c;
  std::vector<Expr> d;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    c.push_back(substitute(components_[i], back));
    d.push_back(-substitute(derivatives_[i], back));
  }
  return ClosedCurve(parameter_, period_, std::move(c), std::move(d));
}

ClosedCurve ClosedCurve::reparameterized(const Expr& g) const {
  const std::array<Expr, 1> sub{g};
  const Expr dg = partial(g, 0);
  std::vector<Expr> c;
  std::vector<Expr> d;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    c.push_back(substitute(components_[i], sub));
    d.push_back(substitute(derivatives_[i], sub) * dg);
  }
  return ClosedCurve(parameter_, period_, std::move(c), std::move(d));
}

SignatureSpec SignatureSpec::elliptic(std::size_t n, double p) {
  return {std::vector<int>(n, 1), p};
}

void SignatureSpec::validate(std::size_t n) const {
  if (signs.size() != n) {
    throw ContextError("signature: expected " + std::to_string(n) + " signs");
  }
  bool positive = false;
  for (int s : signs) {
    if (s != 1 && s != -1) throw ContextError("signature: signs must be ±1");
    positive = positive || s == 1;
  }
  if (!positive) throw ContextError("signature: at least one sign must be +1");
  if (!(p >= 1.0)) throw ContextError("signature: exponent p must be >= 1");
}

Expr SignatureSpec::base(const std::vector<Expr>& v) const {
  validate(v.size());
  Expr sum(0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Expr term = pow(v[i], p);
    sum = signs[i] > 0 ? sum + term : sum - term;
  }
  return sum;
}

Expr SignatureSpec::lambda(const std::vector<Expr>& v) const {
  return pow(base(v), static_cast<double>(v.size()) / p);
}

double SignatureSpec::base(const std::vector<double>& v) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += signs[i] * std::pow(v[i], p);
  }
  return sum;
}

QuadratureResult circulate(const Form& a, const ClosedCurve& c,
                           const QuadratureSpec& q) {
  if (a.degree() != 1) throw ContextError("circulate: expected a 1-form");
  if (a.dimension() != c.dimension()) {
    throw ContextError("circulate: curve and form live in different spaces");
  }
  std::vector<Expr> coeffs;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    coeffs.push_back(a.coefficient({static_cast<int>(i)}));
  }
  const auto integrand = [&](double t) {
    double sum = 0.0;
    try {
      const std::vector<double> x = c.position(t);
      const std::vector<double> v = c.velocity(t);
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (v[i] != 0.0) sum += coeffs[i].eval(x) * v[i];
      }
    } catch (const EvalError& e) {
      throw SingularityError(
          std::string("circulate: integrand not finite (") + e.what() + ")",
          {t});
    }
    if (!std::isfinite(sum)) {
      throw SingularityError("circulate: integrand not finite", {t});
    }
    return sum;
  };
  return integrate(integrand, 0.0, c.period(), q);
}

Form clebsch_form(const Variables& vars, const Expr& phi, const Expr& psi,
                  const SignatureSpec& sig) {
  const Expr denom = pow(sig.base({phi, psi}), 2.0 / sig.p);
  const Form dphi = ext_d(Form::scalar(vars, phi));
  const Form dpsi = ext_d(Form::scalar(vars, psi));
  const Form num = phi * dpsi - psi * dphi;
  Form out(vars, 1);
  for (const auto& [idx, c] : num.terms()) out.add_term(idx, c / denom);
  return out.pruned();
}

QuadratureResult clebsch_circulation(const Variables& vars, const Expr& phi,
                                     const Expr& psi, const SignatureSpec& sig,
                                     const ClosedCurve& c,
                                     const QuadratureSpec& q) {
  return circulate(clebsch_form(vars, phi, psi, sig), c, q);
}

QuadratureResult gauss_linking(const ClosedCurve& c1, const ClosedCurve& c2,
                               const QuadratureSpec& q,
                               const SignatureSpec& sig) {
  if (c1.dimension() != 3 || c2.dimension() != 3) {
    throw ContextError("gauss_linking: curves must live in three dimensions");
  }
  sig.validate(3);
  const double norm = 1.0 / (4.0 * std::numbers::pi);
  const double power = 3.0 / sig.p;
  return refine(q, [&](std::size_t panels) {
    const NodeSet n1 = composite_nodes(q.rule, panels, 0.0, c1.period());
    const NodeSet n2 = composite_nodes(q.rule, panels, 0.0, c2.period());
    const Sampled s1 = sample_curve(c1, n1.nodes, "gauss_linking");
    const Sampled s2 = sample_curve(c2, n2.nodes, "gauss_linking");
    double total = 0.0;
    for (std::size_t i = 0; i < n1.nodes.size(); ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < n2.nodes.size(); ++j) {
        const std::vector<double> z{s2.pos[j][0] - s1.pos[i][0],
                                    s2.pos[j][1] - s1.pos[i][1],
                                    s2.pos[j][2] - s1.pos[i][2]};
        const double dist = std::sqrt(z[0] * z[0] + z[1] * z[1] + z[2] * z[2]);
        if (dist <= kMinCurveDistance) {
          throw SingularityError("gauss_linking: curves are too close (distance " +
                                     format_number(dist) + ")",
                                 {n1.nodes[i], n2.nodes[j], dist});
        }
        const auto v = cross3(s1.vel[i], s2.vel[j]);
        const double num = z[0] * v[0] + z[1] * v[1] + z[2] * v[2];
        const double val = num / std::pow(sig.base(z), power);
        if (!std::isfinite(val)) {
          throw SingularityError("gauss_linking: integrand not finite",
                                 {n1.nodes[i], n2.nodes[j], dist});
        }
        row += n2.weights[j] * val;
      }
      total += n1.weights[i] * row;
    }
    return norm * total;
  });
}

BraidResult braid_integral(const ClosedCurve& p1, const ClosedCurve& p2,
                           const ClosedCurve& p3, double e_over_c,
                           const QuadratureSpec& q, const SignatureSpec& sig) {
  const std::array<const ClosedCurve*, 3> curves{&p1, &p2, &p3};
  for (const ClosedCurve* c : curves) {
    if (c->dimension() != 3) {
      throw ContextError("braid_integral: momentum curves must be 3-dimensional");
    }
  }
  sig.validate(4);
  // Integration variables are assigned by parameter name; unused ones
  // integrate over [0, 1] and contribute an empty Jacobian column.
  std::map<std::string, std::size_t> slot_of;
  std::array<std::size_t, 3> slot{};
  std::array<double, 3> period{1.0, 1.0, 1.0};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [it, fresh] = slot_of.emplace(curves[i]->parameter(), slot_of.size());
    slot[i] = it->second;
    if (fresh) {
      period[slot[i]] = curves[i]->period();
    } else if (period[slot[i]] != curves[i]->period()) {
      throw ContextError("braid_integral: curves sharing parameter '" +
                         curves[i]->parameter() + "' need equal periods");
    }
  }
  const double power = 4.0 / sig.p;
  double l1 = 0.0;
  BraidResult out;
  out.integral = refine(q, [&](std::size_t panels) {
    std::array<NodeSet, 3> grid;
    for (std::size_t s = 0; s < 3; ++s) {
      grid[s] = composite_nodes(q.rule, panels, 0.0, period[s]);
    }
    std::array<Sampled, 3> sampled;
    for (std::size_t i = 0; i < 3; ++i) {
      sampled[i] = sample_curve(*curves[i], grid[slot[i]].nodes, "braid_integral");
    }
    const std::size_t m = panels + 1;
    double total = 0.0;
    double mass = 0.0;
    std::array<std::size_t, 3> at{};
    for (at[0] = 0; at[0] < m; ++at[0]) {
      for (at[1] = 0; at[1] < m; ++at[1]) {
        double row = 0.0;
        double row_mass = 0.0;
        for (at[2] = 0; at[2] < m; ++at[2]) {
          std::vector<double> big{0.0, 0.0, 0.0, e_over_c};
          std::array<std::vector<double>, 3> col;
          col.fill({0.0, 0.0, 0.0});
          for (std::size_t i = 0; i < 3; ++i) {
            const std::size_t k = at[slot[i]];
            for (std::size_t d = 0; d < 3; ++d) {
              big[d] += sampled[i].pos[k][d];
              col[slot[i]][d] += sampled[i].vel[k][d];
            }
          }
          const auto c12 = cross3(col[1], col[2]);
          const double det = col[0][0] * c12[0] + col[0][1] * c12[1] +
                             col[0][2] * c12[2];
          const double lambda = std::pow(sig.base(big), power);
          const std::vector<double> where{grid[0].nodes[at[0]],
                                          grid[1].nodes[at[1]],
                                          grid[2].nodes[at[2]]};
          if (!(std::abs(lambda) >= kMinCurveDistance)) {
            throw SingularityError("braid_integral: denominator vanishes", where);
          }
          const double val = e_over_c * det / lambda;
          if (!std::isfinite(val)) {
            throw SingularityError("braid_integral: integrand not finite", where);
          }
          row += grid[2].weights[at[2]] * val;
          row_mass += grid[2].weights[at[2]] * std::abs(val);
        }
        const double w = grid[0].weights[at[0]] * grid[1].weights[at[1]];
        total += w * row;
        mass += w * row_mass;
      }
    }
    l1 = mass;
    return total;
  });
  out.l1 = l1;
  return out;
}

Form holder_current(const VectorField& v, const SignatureSpec& sig) {
  const std::size_t n = v.dimension();
  if (n != v.variables().size()) {
    throw ContextError("holder_current: need one component per variable");
  }
  require_nonvanishing(sig.lambda(v.components()), n, "holder_current");
  std::vector<std::string> names;
  std::vector<Expr> y;
  IndexTuple top;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("V" + std::to_string(i + 1));
    y.push_back(Expr::variable(i));
    top.push_back(static_cast<int>(i));
  }
  const Variables target(std::move(names));
  const Form j = interior(VectorField(target, y), Form::monomial(target, top));
  const Form pulled =
      pullback(SmoothMap(v.variables(), target, v.components()), j);
  const Expr lambda = sig.lambda(v.components());
  Form out(v.variables(), pulled.degree());
  for (const auto& [idx, c] : pulled.terms()) out.add_term(idx, c / lambda);
  return out.pruned();
}

VectorField cofactor_adjoint_current(const VectorField& v,
                                     const SignatureSpec& sig) {
  const std::size_t n = v.dimension();
  if (n != v.variables().size()) {
    throw ContextError("cofactor_adjoint_current: Jacobian must be square");
  }
  const Expr lambda = sig.lambda(v.components());
  require_nonvanishing(lambda, n, "cofactor_adjoint_current");
  std::vector<std::vector<Expr>> jac(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) jac[i][j] = partial(v[i], j);
  }
  // adj(J)[i][j] is the (j, i) cofactor.
  std::vector<Expr> out(n, Expr(0.0));
  for (std::size_t i = 0; i < n; ++i) {
    Expr sum(0.0);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Expr>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Expr> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != i) row.push_back(jac[r][c]);
        }
        minor.push_back(std::move(row));
      }
      const Expr cof = determinant(minor) * v[j];
      sum = ((i + j) % 2 == 0) ? sum + cof : sum - cof;
    }
    out[i] = sum / lambda;
  }
  return VectorField(v.variables(), std::move(out));
}

Expr divergence(const VectorField& w) {
  Expr sum(0.0);
  for (std::size_t i = 0; i < w.dimension(); ++i) sum = sum + partial(w[i], i);
  return sum;
}

}  // namespace cartan
