#pragma once

// Reading input documents into library types. Every reader reports
// failures as InputError naming the field path.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cartan/expr.hpp"
#include "cartan/form.hpp"
#include "cartan/periods.hpp"
#include "cartan/quadrature.hpp"
#include "cartan/sampling.hpp"
#include "cartan/vector_calculus.hpp"
#include "cartan_cli/app.hpp"

namespace cartan::cli {

using nlohmann::json;

const json& require(const json& node, const std::string& key,
                    const std::string& path);
const json* optional_field(const json& node, const std::string& key,
                           const std::string& path);

Variables read_variables(const json& in, const std::string& path,
                         const std::vector<std::string>& fallback = {});
Expr read_expr(const json& node, const Variables& vars, const std::string& path);
/// A number, or expression text that mentions no variables ("2*pi").
double read_constant(const json& node, const std::string& path);
Vec3 read_vec3(const json& node, const Variables& vars, const std::string& path);
std::vector<double> read_point(const json& node, std::size_t n,
                               const std::string& path);

/// "one_form" map {"dx": "...", ...} plus an optional "phi" subtracted from
/// the coefficient of the last variable.
Form read_one_form(const json& in, const Variables& vars);

SampleBox read_box(const json& in, const Variables& vars, const Overrides& o);
TolerancePolicy read_policy(const json& in, const Variables& vars,
                            const Overrides& o);

ClosedCurve read_curve(const json& node, const std::string& path);
std::vector<ClosedCurve> read_curves(const json& in, std::size_t at_least);
QuadratureSpec read_quadrature(const json& in, const Overrides& o);
SignatureSpec read_signature(const json& in, std::size_t n);

}  // namespace cartan::cli
