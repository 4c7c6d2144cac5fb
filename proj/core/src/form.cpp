#include "cartan/form.hpp"

#include <algorithm>
#include <cmath>

#include "cartan/error.hpp"

namespace cartan {

int sort_with_sign(IndexTuple& indices) {
  int sign = 1;
  // Insertion sort; tuples are at most a handful of entries long.
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i] == indices[i - 1]) return 0;
  }
  return sign;
}

namespace {

void require_same(const Variables& a, const Variables& b, const char* op) {
  if (!(a == b)) {
    throw ContextError(std::string(op) + ": operands live over different "
                       "variable lists");
  }
}

}  // namespace

// --------------------------------------------------------------------- Form

Form::Form(Variables vars, int degree) : vars_(std::move(vars)), degree_(degree) {
  if (degree < 0 || static_cast<std::size_t>(degree) > vars_.size()) {
    throw ContextError("Form: degree " + std::to_string(degree) +
                       " out of range for " + std::to_string(vars_.size()) +
                       " variables");
  }
  if (degree == 0) terms_[{}] = Expr(0.0);
}

Form Form::scalar(Variables vars, Expr value) {
  Form f(std::move(vars), 0);
  f.terms_[{}] = std::move(value);
  return f;
}

Form Form::one_form(Variables vars, const std::vector<Expr>& coeffs) {
  if (coeffs.size() != vars.size()) {
    throw ContextError("one_form: expected " + std::to_string(vars.size()) +
                       " coefficients");
  }
  Form f(std::move(vars), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_constant(0.0)) {
      f.terms_[{static_cast<int>(i)}] = coeffs[i];
    }
  }
  return f;
}

Form Form::monomial(Variables vars, IndexTuple indices, Expr coeff) {
  if (indices.size() > vars.size()) return top_exceeded(std::move(vars));
  Form f(std::move(vars), static_cast<int>(indices.size()));
  const int sign = sort_with_sign(indices);
  if (sign == 0) return f;
  f.add_term(indices, sign > 0 ? coeff : -coeff);
  return f;
}

Form Form::top_exceeded(Variables vars) {
  const int n = static_cast<int>(vars.size());
  Form f(std::move(vars), n);
  f.terms_.clear();
  f.exceeds_top_ = true;
  return f;
}

Expr Form::coefficient(const IndexTuple& indices) const {
  const auto it = terms_.find(indices);
  return it == terms_.end() ? Expr(0.0) : it->second;
}

void Form::add_term(const IndexTuple& indices, const Expr& coeff) {
  if (exceeds_top_) {
    throw ContextError("add_term: cannot add to a top-exceeded form");
  }
  if (indices.size() != static_cast<std::size_t>(degree_)) {
    throw ContextError("add_term: index tuple length does not match degree");
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || static_cast<std::size_t>(indices[i]) >= dimension() ||
        (i > 0 && indices[i - 1] >= indices[i])) {
      throw ContextError("add_term: index tuple must be strictly increasing "
                         "within [0, N)");
    }
  }
  auto [it, inserted] = terms_.try_emplace(indices, coeff);
  if (!inserted) it->second = it->second + coeff;
}

Form Form::pruned() const {
  Form out = *this;
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    if (degree_ > 0 && it->second.is_constant(0.0)) {
      it = out.terms_.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

std::map<IndexTuple, double> Form::eval(std::span<const double> point) const {
  std::map<IndexTuple, double> out;
  for (const auto& [idx, c] : terms_) out[idx] = c.eval(point);
  return out;
}

Form& Form::operator+=(const Form& other) {
  require_same(vars_, other.vars_, "form addition");
  if (other.exceeds_top_) return *this;
  if (exceeds_top_) return *this = other;
  if (degree_ != other.degree_) {
    throw ContextError("form addition: degrees differ");
  }
  for (const auto& [idx, c] : other.terms_) add_term(idx, c);
  return *this;
}

Form& Form::operator-=(const Form& other) { return *this += -other; }

Form operator-(const Form& a) {
  Form out = a;
  for (auto& [idx, c] : out.terms_) c = -c;
  return out;
}

Form operator*(const Expr& f, const Form& a) {
  Form out = a;
  for (auto& [idx, c] : out.terms_) c = f * c;
  return out;
}

std::string to_string(const Form& a) {
  if (a.degree() == 0) return to_string(a.coefficient({}), a.variables());
  std::string out;
  const Variables& vars = a.variables();
  for (const auto& [idx, coeff] : a.terms()) {
    if (coeff.is_constant(0.0)) continue;
    std::string basis;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k > 0) basis += "∧";
      basis += "d" + vars[static_cast<std::size_t>(idx[k])];
    }
    // A leading minus is pulled out into the separator.
    Expr c = coeff;
    bool negative = false;
    if (c.kind() == Expr::Kind::Negate) {
      c = c.lhs();
      negative = true;
    } else if (c.is_constant() && c.value() < 0.0) {
      c = Expr(-c.value());
      negative = true;
    } else if ((c.kind() == Expr::Kind::Mul || c.kind() == Expr::Kind::Div) &&
               c.lhs().kind() == Expr::Kind::Negate) {
      c = Expr::binary(c.kind(), c.lhs().lhs(), c.rhs());
      negative = true;
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (c.is_constant(1.0)) {
      out += basis;
    } else if (c.kind() == Expr::Kind::Add || c.kind() == Expr::Kind::Sub ||
               c.kind() == Expr::Kind::Negate ||
               (c.is_constant() && c.value() < 0.0)) {
      out += "(" + to_string(c, vars) + ") " + basis;
    } else {
      out += to_string(c, vars) + " " + basis;
    }
  }
  return out.empty() ? "0" : out;
}

// -------------------------------------------------------------- VectorField

VectorField::VectorField(Variables vars, std::vector<Expr> components)
    : vars_(std::move(vars)), components_(std::move(components)) {
  if (components_.size() != vars_.size()) {
    throw ContextError("VectorField: component count must equal the number "
                       "of variables");
  }
}

SmoothMap::SmoothMap(Variables source, Variables target,
                     std::vector<Expr> components)
    : source_(std::move(source)),
      target_(std::move(target)),
      components_(std::move(components)) {
  if (components_.size() != target_.size()) {
    throw ContextError("SmoothMap: component count must equal the target "
                       "dimension");
  }
  for (const Expr& c : components_) {
    if (c.arity() > source_.size()) {
      throw ContextError("SmoothMap: component references a variable outside "
                         "the source list");
    }
  }
}

// ---------------------------------------------------------------- operators

Form wedge(const Form& a, const Form& b) {
  require_same(a.variables(), b.variables(), "wedge");
  const std::size_t n = a.dimension();
  const int degree = a.degree() + b.degree();
  if (a.exceeds_top() || b.exceeds_top() ||
      static_cast<std::size_t>(degree) > n) {
    return Form::top_exceeded(a.variables());
  }
  Form out(a.variables(), degree);
  for (const auto& [ia, ca] : a.terms()) {
    if (ca.is_constant(0.0)) continue;
    for (const auto& [ib, cb] : b.terms()) {
      if (cb.is_constant(0.0)) continue;
      IndexTuple idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      const int sign = sort_with_sign(idx);
      if (sign == 0) continue;
      const Expr product = ca * cb;
      out.add_term(idx, sign > 0 ? product : -product);
    }
  }
  return out.pruned();
}

Form ext_d(const Form& a) {
  const std::size_t n = a.dimension();
  if (a.exceeds_top() || static_cast<std::size_t>(a.degree()) >= n) {
    return Form::top_exceeded(a.variables());
  }
  Form out(a.variables(), a.degree() + 1);
  for (const auto& [idx, c] : a.terms()) {
    for (std::size_t v = 0; v < n; ++v) {
      if (std::find(idx.begin(), idx.end(), static_cast<int>(v)) != idx.end()) {
        continue;
      }
      const Expr dc = partial(c, v);
      if (dc.is_constant(0.0)) continue;
      IndexTuple key{static_cast<int>(v)};
      key.insert(key.end(), idx.begin(), idx.end());
      const int sign = sort_with_sign(key);
      out.add_term(key, sign > 0 ? dc : -dc);
    }
  }
  return out.pruned();
}

Form interior(const VectorField& v, const Form& a) {
  require_same(v.variables(), a.variables(), "interior");
  if (a.degree() == 0) {
    throw ContextError("interior: contraction of a 0-form is undefined");
  }
  Form out(a.variables(), a.degree() - 1);
  if (a.exceeds_top()) return out;
  for (const auto& [idx, c] : a.terms()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Expr& vk = v[static_cast<std::size_t>(idx[k])];
      if (vk.is_constant(0.0)) continue;
      IndexTuple rest = idx;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      const Expr term = vk * c;
      out.add_term(rest, k % 2 == 0 ? term : -term);
    }
  }
  return out.pruned();
}

Form lie(const VectorField& v, const Form& a) {
  require_same(v.variables(), a.variables(), "lie");
  if (a.degree() == 0) return interior(v, ext_d(a));
  if (a.exceeds_top()) return a;
  if (static_cast<std::size_t>(a.degree()) == a.dimension()) {
    return ext_d(interior(v, a));
  }
  return interior(v, ext_d(a)) + ext_d(interior(v, a));
}

Form pullback(const SmoothMap& m, const Form& a) {
  require_same(m.target(), a.variables(), "pullback");
  const Variables& src = m.source();
  const std::size_t n_src = src.size();
  if (a.exceeds_top() || static_cast<std::size_t>(a.degree()) > n_src) {
    return Form::top_exceeded(src);
  }
  // d(m^i) over the source coordinates, one per target variable.
  std::vector<Form> dm;
  dm.reserve(m.components().size());
  for (const Expr& mi : m.components()) {
    std::vector<Expr> grad(n_src);
    for (std::size_t u = 0; u < n_src; ++u) grad[u] = partial(mi, u);
    dm.push_back(Form::one_form(src, grad));
  }
  Form out(src, a.degree());
  for (const auto& [idx, c] : a.terms()) {
    Form term = Form::scalar(src, substitute(c, m.components()));
    for (const int i : idx) term = wedge(term, dm[static_cast<std::size_t>(i)]);
    out += term;
  }
  return out.pruned();
}

FormZeroVerdict form_is_zero(const Form& a, const SampleBox& box,
                             const TolerancePolicy& pol) {
  FormZeroVerdict out;
  if (a.exceeds_top()) return out;
  for (const auto& [idx, c] : a.terms()) {
    if (c.is_constant(0.0)) continue;
    ZeroVerdict v = is_zero(c, box, pol);
    if (!v.zero) {
      out.zero = false;
      out.component = idx;
      out.detail = std::move(v);
      return out;
    }
    out.detail.evaluated = std::max(out.detail.evaluated, v.evaluated);
    out.detail.skipped = std::max(out.detail.skipped, v.skipped);
  }
  return out;
}

double sampled_max_abs(const Form& a, const SampleBox& box,
                       const TolerancePolicy& pol) {
  double worst = 0.0;
  if (a.exceeds_top()) return worst;
  for (const auto& p : box.points()) {
    if (pol.excludes(p)) continue;
    for (const auto& [idx, c] : a.terms()) {
      try {
        worst = std::max(worst, std::abs(c.eval(p)));
      } catch (const EvalError&) {
      }
    }
  }
  return worst;
}

}  // namespace cartan
