#include "spec_io.hpp"

#include <array>
#include <cmath>

#include "cartan/error.hpp"

namespace cartan::cli {

namespace {

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

double read_number(const json& node, const std::string& path) {
  if (!node.is_number()) throw InputError(path, "expected a number");
  return node.get<double>();
}

std::size_t read_count(const json& node, const std::string& path) {
  if (!node.is_number_integer() || node.get<long long>() < 0) {
    throw InputError(path, "expected a non-negative integer");
  }
  return node.get<std::size_t>();
}

}  // namespace

const json& require(const json& node, const std::string& key,
                    const std::string& path) {
  if (!node.is_object()) throw InputError(path, "expected an object");
  const auto it = node.find(key);
  if (it == node.end()) throw InputError(join(path, key), "missing field");
  return *it;
}

const json* optional_field(const json& node, const std::string& key,
                           const std::string& path) {
  if (!node.is_object()) throw InputError(path, "expected an object");
  const auto it = node.find(key);
  return it == node.end() || it->is_null() ? nullptr : &*it;
}

Variables read_variables(const json& in, const std::string& path,
                         const std::vector<std::string>& fallback) {
  const json* node = optional_field(in, "variables", path);
  if (!node) {
    if (fallback.empty()) throw InputError(join(path, "variables"), "missing field");
    return Variables(fallback);
  }
  const std::string here = join(path, "variables");
  if (!node->is_array() || node->empty()) {
    throw InputError(here, "expected a non-empty list of names");
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < node->size(); ++i) {
    if (!(*node)[i].is_string()) throw InputError(index(here, i), "expected a name");
    names.push_back((*node)[i].get<std::string>());
  }
  try {
    return Variables(std::move(names));
  } catch (const ContextError& e) {
    throw InputError(here, e.what());
  }
}

Expr read_expr(const json& node, const Variables& vars, const std::string& path) {
  if (node.is_number()) return Expr(node.get<double>());
  if (!node.is_string()) throw InputError(path, "expected expression text");
  try {
    return parse_expr(node.get<std::string>(), vars);
  } catch (const ParseError& e) {
    throw InputError(path, e.what());
  }
}

double read_constant(const json& node, const std::string& path) {
  if (node.is_number()) return node.get<double>();
  const Variables none{"_"};
  const Expr e = read_expr(node, none, path);
  if (e.arity() != 0) throw InputError(path, "expected a constant");
  try {
    const std::array<double, 1> p{0.0};
    return e.eval(p);
  } catch (const EvalError& err) {
    throw InputError(path, err.what());
  }
}

Vec3 read_vec3(const json& node, const Variables& vars, const std::string& path) {
  if (!node.is_array() || node.size() != 3) {
    throw InputError(path, "expected three expressions");
  }
  return {read_expr(node[0], vars, index(path, 0)),
          read_expr(node[1], vars, index(path, 1)),
          read_expr(node[2], vars, index(path, 2))};
}

std::vector<double> read_point(const json& node, std::size_t n,
                               const std::string& path) {
  if (!node.is_array() || node.size() != n) {
    throw InputError(path, "expected " + std::to_string(n) + " coordinates");
  }
  std::vector<double> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(read_number(node[i], index(path, i)));
  return p;
}

Form read_one_form(const json& in, const Variables& vars) {
  const json& map = require(in, "one_form", "");
  if (!map.is_object()) throw InputError("one_form", "expected an object");
  std::vector<Expr> coeffs(vars.size(), Expr(0.0));
  for (const auto& [key, value] : map.items()) {
    const std::string here = "one_form." + key;
    if (key.size() < 2 || key[0] != 'd' || !vars.contains(key.substr(1))) {
      throw InputError(here, "key must be 'd' followed by a variable name");
    }
    coeffs[vars.index_of(key.substr(1))] = read_expr(value, vars, here);
  }
  if (const json* phi = optional_field(in, "phi", "")) {
    coeffs.back() = coeffs.back() - read_expr(*phi, vars, "phi");
  }
  return Form::one_form(vars, coeffs);
}

SampleBox read_box(const json& in, const Variables& vars, const Overrides& o) {
  std::vector<Interval> bounds(vars.size(), Interval{-1.0, 1.0});
  if (const json* box = optional_field(in, "box", "")) {
    if (!box->is_object()) throw InputError("box", "expected an object");
    for (const auto& [name, range] : box->items()) {
      const std::string here = "box." + name;
      if (!vars.contains(name)) throw InputError(here, "unknown variable");
      const std::vector<double> r = read_point(range, 2, here);
      if (!(r[0] < r[1])) throw InputError(here, "need low < high");
      bounds[vars.index_of(name)] = {r[0], r[1]};
    }
  }
  std::size_t samples = 64;
  std::uint64_t seed = 0;
  if (const json* s = optional_field(in, "samples", "")) samples = read_count(*s, "samples");
  if (const json* s = optional_field(in, "seed", "")) seed = read_count(*s, "seed");
  if (o.samples) samples = *o.samples;
  if (o.seed) seed = *o.seed;
  if (samples == 0) throw InputError("samples", "must be >= 1");
  return SampleBox(std::move(bounds), samples, seed);
}

TolerancePolicy read_policy(const json& in, const Variables& vars,
                            const Overrides& o) {
  TolerancePolicy pol;
  if (const json* t = optional_field(in, "tolerances", "")) {
    if (const json* a = optional_field(*t, "abs", "tolerances")) {
      pol.abs = read_number(*a, "tolerances.abs");
    }
    if (const json* r = optional_field(*t, "rel", "tolerances")) {
      pol.rel = read_number(*r, "tolerances.rel");
    }
  }
  if (o.tol_abs) pol.abs = *o.tol_abs;
  if (o.tol_rel) pol.rel = *o.tol_rel;
  if (!(pol.abs > 0.0)) throw InputError("tolerances.abs", "must be > 0");
  if (!(pol.rel >= 0.0)) throw InputError("tolerances.rel", "must be >= 0");
  if (const json* ex = optional_field(in, "exclusion", "")) {
    Exclusion e;
    if (ex->is_object()) {
      e.expr = read_expr(require(*ex, "expr", "exclusion"), vars, "exclusion.expr");
      if (const json* th = optional_field(*ex, "threshold", "exclusion")) {
        e.threshold = read_number(*th, "exclusion.threshold");
      }
    } else {
      e.expr = read_expr(*ex, vars, "exclusion");
    }
    pol.exclusion = std::move(e);
  }
  return pol;
}

ClosedCurve read_curve(const json& node, const std::string& path) {
  const json& p = require(node, "parameter", path);
  if (!p.is_string()) throw InputError(join(path, "parameter"), "expected a name");
  const std::string name = p.get<std::string>();
  const Variables pv{name};
  const double period = read_constant(require(node, "period", path), join(path, "period"));
  const json& comps = require(node, "components", path);
  const std::string here = join(path, "components");
  if (!comps.is_array() || comps.empty()) {
    throw InputError(here, "expected a non-empty list of expressions");
  }
  std::vector<Expr> c;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    c.push_back(read_expr(comps[i], pv, index(here, i)));
  }
  try {
    return ClosedCurve(name, period, std::move(c));
  } catch (const ContextError& e) {
    throw InputError(path, e.what());
  }
}

std::vector<ClosedCurve> read_curves(const json& in, std::size_t at_least) {
  const json& list = require(in, "curves", "");
  if (!list.is_array() || list.size() < at_least) {
    throw InputError("curves", "expected at least " + std::to_string(at_least) +
                                   " curve(s)");
  }
  std::vector<ClosedCurve> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(read_curve(list[i], index("curves", i)));
  }
  return out;
}

QuadratureSpec read_quadrature(const json& in, const Overrides& o) {
  QuadratureSpec q;
  if (const json* node = optional_field(in, "quadrature", "")) {
    if (const json* r = optional_field(*node, "rule", "quadrature")) {
      const std::string rule = r->is_string() ? r->get<std::string>() : "";
      if (rule == "simpson") {
        q.rule = QuadratureRule::Simpson;
      } else if (rule == "trapezoid") {
        q.rule = QuadratureRule::Trapezoid;
      } else {
        throw InputError("quadrature.rule", "expected \"simpson\" or \"trapezoid\"");
      }
    }
    if (const json* p = optional_field(*node, "panels", "quadrature")) {
      q.panels = read_count(*p, "quadrature.panels");
    }
    if (const json* r = optional_field(*node, "refinements", "quadrature")) {
      q.refinements = read_count(*r, "quadrature.refinements");
    }
    if (const json* t = optional_field(*node, "tol", "quadrature")) {
      q.tol = read_number(*t, "quadrature.tol");
    }
  }
  if (o.panels) q.panels = *o.panels;
  if (o.refine) q.refinements = *o.refine;
  try {
    q.validate();
  } catch (const ContextError& e) {
    throw InputError("quadrature", e.what());
  }
  return q;
}

SignatureSpec read_signature(const json& in, std::size_t n) {
  SignatureSpec sig = SignatureSpec::elliptic(n);
  if (const json* node = optional_field(in, "signature", "")) {
    if (const json* s = optional_field(*node, "signs", "signature")) {
      if (!s->is_array()) throw InputError("signature.signs", "expected a list");
      sig.signs.clear();
      for (std::size_t i = 0; i < s->size(); ++i) {
        if (!(*s)[i].is_number_integer()) {
          throw InputError(index("signature.signs", i), "expected +1 or -1");
        }
        sig.signs.push_back((*s)[i].get<int>());
      }
    }
    if (const json* p = optional_field(*node, "p", "signature")) {
      sig.p = read_number(*p, "signature.p");
    }
  }
  try {
    sig.validate(n);
  } catch (const ContextError& e) {
    throw InputError("signature", e.what());
  }
  return sig;
}

}  // namespace cartan::cli
