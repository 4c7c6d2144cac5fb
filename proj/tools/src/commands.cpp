#include <cmath>
#include <map>
#include <numbers>

#include "cartan/error.hpp"
#include "cartan/form.hpp"
#include "cartan/periods.hpp"
#include "cartan/pfaff.hpp"
#include "cartan/physics.hpp"
#include "cartan/topology.hpp"
#include "cartan_cli/app.hpp"
#include "spec_io.hpp"

namespace cartan::cli {

namespace {

json number_or_null(std::optional<double> v) {
  return v ? json(*v) : json(nullptr);
}

std::string basis_name(const IndexTuple& idx, const Variables& vars) {
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k > 0) out += "∧";
    out += "d" + vars[static_cast<std::size_t>(idx[k])];
  }
  return out;
}

json element_json(const PfaffElement& e) {
  json j;
  j["label"] = e.label;
  j["degree"] = e.form.degree();
  j["form"] = to_string(e.form);
  j["nonvanishing"] = e.nonvanishing;
  if (e.nonvanishing) {
    j["witness"] = e.verdict.detail.witness;
    j["value"] = e.verdict.detail.value;
    j["component"] = basis_name(e.verdict.component, e.form.variables());
  } else {
    j["witness"] = nullptr;
    j["value"] = nullptr;
    j["component"] = nullptr;
  }
  return j;
}

json topology_json(const FiniteTopology& t) {
  json j;
  j["carrier"] = t.labels();
  json opens = json::array();
  for (PointSet s : t.opens()) opens.push_back(t.format(s));
  json closeds = json::array();
  for (PointSet s : t.closeds()) closeds.push_back(t.format(s));
  j["opens"] = opens;
  j["closeds"] = closeds;
  json table = json::array();
  const PointSet count = PointSet{1} << t.size();
  for (PointSet s = 0; s < count; ++s) {
    const TopoOperators ops = topo_operators(t, s);
    table.push_back({{"subset", t.format(s)},
                     {"limit_points", t.format(limit_points(t, s))},
                     {"interior", t.format(ops.interior)},
                     {"boundary", t.format(ops.boundary)},
                     {"closure", t.format(ops.closure)}});
  }
  j["table"] = table;
  j["connected"] = is_connected(t);
  j["d_is_limit_operator"] = verify_d_is_limit_operator(t);
  j["intersection_closed"] = opens_closed_under_intersection(t);
  return j;
}

json quadrature_json(const QuadratureResult& r, const QuadratureSpec& q) {
  json table = json::array();
  for (const RefinementRow& row : r.table) {
    table.push_back({{"panels", row.panels},
                     {"value", row.value},
                     {"extrapolated", number_or_null(row.extrapolated)}});
  }
  return {{"value", r.value},
          {"error", number_or_null(r.error)},
          {"converged", r.converged},
          {"rule", to_string(q.rule)},
          {"table", table}};
}

json settings_json(const SampleBox& box, const TolerancePolicy& pol) {
  return {{"samples", box.samples()},
          {"seed", box.seed()},
          {"tol_abs", pol.abs},
          {"tol_rel", pol.rel}};
}

// Adding +0.0 folds a negative zero into 0.
double eval_at(const Expr& e, const std::vector<double>& p) { return e.eval(p) + 0.0; }

json scalar_json(const Expr& e, const Variables& vars,
                 const std::vector<double>& point) {
  return {{"expr", to_string(e, vars)}, {"at_point", eval_at(e, point)}};
}

json scalar_json(const Expr& e, const Variables& vars,
                 const std::vector<double>& point, const SampleBox& box,
                 const TolerancePolicy& pol) {
  json j = scalar_json(e, vars, point);
  j["zero"] = is_zero(e, box, pol).zero;
  return j;
}

json vec_json(const Vec3& v, const Variables& vars,
              const std::vector<double>& point) {
  json exprs = json::array();
  json values = json::array();
  for (const Expr& c : v) {
    exprs.push_back(to_string(c, vars));
    values.push_back(eval_at(c, point));
  }
  return {{"exprs", exprs}, {"at_point", values}};
}

json vec_json(const Vec3& v, const Variables& vars,
              const std::vector<double>& point, const SampleBox& box,
              const TolerancePolicy& pol) {
  json j = vec_json(v, vars, point);
  bool zero = true;
  for (const Expr& c : v) zero = zero && is_zero(c, box, pol).zero;
  j["zero"] = zero;
  return j;
}

json header(const char* command) {
  return {{"command", command}, {"status", "ok"}, {"warnings", json::array()}};
}

}  // namespace

json cmd_analyze(const json& in, const Overrides& o) {
  const Variables vars = read_variables(in, "");
  const Form a = read_one_form(in, vars);
  const SampleBox box = read_box(in, vars, o);
  const TolerancePolicy pol = read_policy(in, vars, o);
  const PfaffReport r = analyze_pfaff(a, box, pol);

  json out = header("analyze");
  out["variables"] = std::vector<std::string>(vars.names().begin(), vars.names().end());
  out["one_form"] = to_string(a);
  out["settings"] = settings_json(box, pol);
  json seq = json::array();
  for (const PfaffElement& e : r.sequence.elements) seq.push_back(element_json(e));
  std::map<std::string, std::size_t> hist;
  for (const auto& d : r.pointwise) {
    ++hist[d ? std::to_string(*d) : std::string("undefined")];
  }
  out["pfaff"] = {{"dimension", r.dimension},
                  {"sequence", seq},
                  {"pointwise", hist}};
  if (r.torsion) {
    json t = json::array();
    for (const Expr& c : r.torsion->T) t.push_back(to_string(c, vars));
    out["torsion"] = {{"T", t}, {"h", to_string(r.torsion->h, vars)}};
  } else {
    out["torsion"] = nullptr;
  }
  out["parity"] = r.parity ? json(to_string(*r.parity, vars)) : json(nullptr);
  out["connected"] = r.connected;
  out["topology"] = r.dimension > 0
                        ? topology_json(build_cartan_topology(r.sequence))
                        : json(nullptr);
  if (r.dimension == 0) out["warnings"].push_back("the 1-form vanishes on the box");
  return out;
}

json cmd_topology(const json& in, const Overrides& o) {
  std::size_t points = 4;
  std::optional<int> dimension;
  if (in.is_object() && in.contains("one_form")) {
    const Variables vars = read_variables(in, "");
    const Form a = read_one_form(in, vars);
    const PfaffSequence seq = pfaff_sequence(a, read_box(in, vars, o),
                                             read_policy(in, vars, o));
    dimension = seq.dimension();
    if (*dimension == 0) throw InputError("one_form", "vanishes on the box");
    points = static_cast<std::size_t>(*dimension);
  } else if (const json* p = in.is_object() ? optional_field(in, "points", "") : nullptr) {
    if (!p->is_number_integer() || p->get<long long>() < 1 || p->get<long long>() > 16) {
      throw InputError("points", "expected an integer in [1, 16]");
    }
    points = p->get<std::size_t>();
  }
  const FiniteTopology t = cartan_topology(points);
  json out = header("topology");
  out["pfaff_dimension"] = dimension ? json(*dimension) : json(nullptr);
  out["topology"] = topology_json(t);
  out["map_continuous"] = nullptr;
  if (const json* m = in.is_object() ? optional_field(in, "map", "") : nullptr) {
    if (!m->is_object()) throw InputError("map", "expected {label: label}");
    std::vector<std::size_t> f(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) f[i] = i;
    for (const auto& [from, to] : m->items()) {
      const std::string here = "map." + from;
      if (!to.is_string()) throw InputError(here, "expected a label");
      std::size_t src = t.size();
      std::size_t dst = t.size();
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.labels()[i] == from) src = i;
        if (t.labels()[i] == to.get<std::string>()) dst = i;
      }
      if (src == t.size() || dst == t.size()) throw InputError(here, "unknown label");
      f[src] = dst;
    }
    out["map_continuous"] = map_continuous(t, t, f);
  }
  return out;
}

json cmd_circulate(const json& in, const Overrides& o) {
  const Variables vars = read_variables(in, "");
  Form a(vars, 1);
  if (const json* c = optional_field(in, "clebsch", "")) {
    const Expr phi = read_expr(require(*c, "phi", "clebsch"), vars, "clebsch.phi");
    const Expr psi = read_expr(require(*c, "psi", "clebsch"), vars, "clebsch.psi");
    a = clebsch_form(vars, phi, psi, read_signature(in, 2));
  } else {
    a = read_one_form(in, vars);
  }
  const QuadratureSpec q = read_quadrature(in, o);
  const std::vector<ClosedCurve> curves = read_curves(in, 1);
  json out = header("circulate");
  out["one_form"] = to_string(a);
  json results = json::array();
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (curves[i].dimension() != vars.size()) {
      throw InputError("curves[" + std::to_string(i) + "].components",
                       "need one component per variable");
    }
    const QuadratureResult r = circulate(a, curves[i], q);
    json j = quadrature_json(r, q);
    j["curve"] = i;
    j["magnitude"] = std::abs(r.value);
    j["over_two_pi"] = r.value / (2.0 * std::numbers::pi);
    results.push_back(j);
  }
  out["circulations"] = results;
  return out;
}

json cmd_link(const json& in, const Overrides& o) {
  const std::vector<ClosedCurve> curves = read_curves(in, 2);
  const QuadratureSpec q = read_quadrature(in, o);
  const SignatureSpec sig = read_signature(in, 3);
  for (std::size_t i = 0; i < 2; ++i) {
    if (curves[i].dimension() != 3) {
      throw InputError("curves[" + std::to_string(i) + "].components",
                       "linking needs curves in three dimensions");
    }
  }
  const QuadratureResult r = gauss_linking(curves[0], curves[1], q, sig);
  json out = header("link");
  out["linking"] = quadrature_json(r, q);
  const double nearest = std::round(r.value);
  out["linking"]["nearest_integer"] = static_cast<long long>(nearest);
  out["linking"]["residual"] = std::abs(r.value - nearest);
  return out;
}

json cmd_braid(const json& in, const Overrides& o) {
  const std::vector<ClosedCurve> curves = read_curves(in, 3);
  const QuadratureSpec q = read_quadrature(in, o);
  const SignatureSpec sig = read_signature(in, 4);
  double e_over_c = 1.0;
  if (const json* c = optional_field(in, "constants", "")) {
    if (const json* e = optional_field(*c, "E_over_c", "constants")) {
      e_over_c = read_constant(*e, "constants.E_over_c");
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (curves[i].dimension() != 3) {
      throw InputError("curves[" + std::to_string(i) + "].components",
                       "momentum curves need three components");
    }
  }
  const BraidResult r = braid_integral(curves[0], curves[1], curves[2], e_over_c, q, sig);
  json out = header("braid");
  out["braid"] = quadrature_json(r.integral, q);
  out["braid"]["l1"] = r.l1;
  out["braid"]["relative"] = r.l1 > 0.0 ? r.integral.value / r.l1 : 0.0;
  out["braid"]["E_over_c"] = e_over_c;
  return out;
}

json cmd_physics(const json& in, const Overrides& o) {
  const Variables vars = read_variables(in, "", {"x", "y", "z", "t"});
  if (vars.size() != 4) throw InputError("variables", "physics needs (x, y, z, t)");
  const SampleBox box = read_box(in, vars, o);
  const TolerancePolicy pol = read_policy(in, vars, o);
  std::vector<double> point(4, 0.0);
  if (const json* p = optional_field(in, "point", "")) point = read_point(*p, 4, "point");

  json out = header("physics");
  out["point"] = point;
  out["settings"] = settings_json(box, pol);
  out["fluid"] = nullptr;
  out["em"] = nullptr;
  const json* fluid = optional_field(in, "fluid", "");
  const json* em = optional_field(in, "em", "");
  if (!fluid && !em) throw InputError("", "expected a \"fluid\" or \"em\" block");

  if (fluid) {
    FluidState f{vars, read_vec3(require(*fluid, "v", "fluid"), vars, "fluid.v"),
                 Expr(0.0), 0.0};
    if (const json* psi = optional_field(*fluid, "psi", "fluid")) {
      f.psi = read_expr(*psi, vars, "fluid.psi");
    }
    if (const json* nu = optional_field(*fluid, "nu", "fluid")) {
      if (!nu->is_number() || nu->get<double>() < 0.0) {
        throw InputError("fluid.nu", "expected a number >= 0");
      }
      f.nu = nu->get<double>();
    }
    std::optional<Expr> theta;
    if (const json* th = optional_field(*fluid, "theta", "fluid")) {
      theta = read_expr(*th, vars, "fluid.theta");
    }
    const NavierStokesResidual ns = ns_residual(f);
    const HelicityDiagnostics hd = helicity_diagnostics(f, box, pol);
    json parity = scalar_json(ns_parity(f), vars, point, box, pol);
    parity["from_forms_at_point"] = eval_at(ns_parity_from_forms(f), point);
    json j;
    j["nu"] = f.nu;
    j["vorticity"] = vec_json(f.vorticity(), vars, point);
    j["euler_residual"] = vec_json(euler_residual(f), vars, point, box, pol);
    j["helmholtz_residual"] = vec_json(helmholtz_residual(f), vars, point, box, pol);
    j["ns_residual"] = {{"momentum", vec_json(ns.momentum, vars, point, box, pol)},
                        {"divergence", scalar_json(ns.divergence, vars, point, box, pol)}};
    j["parity"] = parity;
    j["helicity"] = {{"h", scalar_json(hd.h, vars, point)},
                     {"T", vec_json(hd.T, vars, point)},
                     {"conservation", scalar_json(hd.conservation, vars, point, box, pol)},
                     {"dH_zero", hd.dH_zero.zero}};
    j["process_class"] = to_string(classify_process(f.flow(), f.action(), box, pol, theta));
    out["fluid"] = j;
  }
  if (em) {
    EMPotentials p{vars, read_vec3(require(*em, "A", "em"), vars, "em.A"), Expr(0.0)};
    if (const json* phi = optional_field(*em, "phi", "em")) {
      p.phi = read_expr(*phi, vars, "em.phi");
    }
    const EMFields fields = em_fields(p);
    const FaradayResidual fr = maxwell_faraday_residual(fields);
    const TorsionCurrent tc = torsion_current(p.action());
    const Form f = ext_d(p.action());
    json j;
    j["E"] = vec_json(fields.E, vars, point);
    j["B"] = vec_json(fields.B, vars, point);
    j["faraday"] = {{"curl_e_plus_db_dt", vec_json(fr.curl_e_plus_db_dt, vars, point, box, pol)},
                    {"div_b", scalar_json(fr.div_b, vars, point, box, pol)}};
    j["torsion"] = {{"T", vec_json(tc.T, vars, point)}, {"h", scalar_json(tc.h, vars, point)}};
    j["parity"] = scalar_json(wedge(f, f).coefficient({0, 1, 2, 3}), vars, point);
    j["master"] = nullptr;
    j["process_class"] = nullptr;
    if (const json* v = optional_field(*em, "V", "em")) {
      const Vec3 vel = read_vec3(*v, vars, "em.V");
      const MasterResiduals m = master_residuals(p, vel);
      j["master"] = {{"r1", vec_json(m.r1, vars, point, box, pol)},
                     {"r2", vec_json(m.r2, vars, point, box, pol)}};
      const VectorField v4(vars, {vel[0], vel[1], vel[2], Expr(1.0)});
      j["process_class"] = to_string(classify_process(v4, p.action(), box, pol));
    }
    out["em"] = j;
  }
  return out;
}

}  // namespace cartan::cli
