#include <iomanip>
#include <sstream>

#include "cartan/expr.hpp"
#include "cartan_cli/app.hpp"

namespace cartan::cli {

namespace {

using nlohmann::json;

std::string num(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_number_float()) return format_number(v.get<double>());
  return v.dump();
}

std::string list(const json& arr, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i > 0) out += sep;
    out += arr[i].is_string() ? arr[i].get<std::string>() : num(arr[i]);
  }
  return out;
}

std::string yes_no(const json& v) { return v.get<bool>() ? "yes" : "no"; }

void pad(std::ostream& os, const std::string& s, std::size_t width) {
  // Column widths count code points, not bytes ("∅" and "∪" are multibyte).
  std::size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  os << s;
  for (; cps < width; ++cps) os << ' ';
}

void topology_text(std::ostream& os, const json& t) {
  os << "Cartan topology on {" << list(t["carrier"]) << "}\n";
  os << "  open sets   (" << t["opens"].size() << "): " << list(t["opens"]) << "\n";
  os << "  closed sets (" << t["closeds"].size() << "): " << list(t["closeds"]) << "\n";
  os << "  connected: " << yes_no(t["connected"])
     << ", d is the limit operator: " << yes_no(t["d_is_limit_operator"])
     << ", opens closed under ∩: " << yes_no(t["intersection_closed"]) << "\n\n";
  const std::size_t w = 14;
  os << "  ";
  for (const char* h : {"subset", "limit points", "interior", "boundary"}) pad(os, h, w);
  os << "closure\n";
  for (const json& row : t["table"]) {
    os << "  ";
    pad(os, row["subset"], w);
    pad(os, row["limit_points"], w);
    pad(os, row["interior"], w);
    pad(os, row["boundary"], w);
    os << row["closure"].get<std::string>() << "\n";
  }
}

void quadrature_text(std::ostream& os, const json& q) {
  os << "  " << q["rule"].get<std::string>() << " refinement table\n";
  os << "    panels  value                   extrapolated\n";
  for (const json& row : q["table"]) {
    os << "    " << std::setw(6) << row["panels"].get<std::size_t>() << "  ";
    pad(os, num(row["value"]), 24);
    os << num(row["extrapolated"]) << "\n";
  }
  os << "  error estimate " << num(q["error"]) << ", converged "
     << yes_no(q["converged"]) << "\n";
}

void vec_text(std::ostream& os, const char* name, const json& v) {
  os << "  " << name << " = (" << list(v["at_point"]) << ")";
  if (v.contains("zero")) os << (v["zero"].get<bool>() ? "  [≡ 0]" : "  [≠ 0]");
  os << "\n";
}

void scalar_text(std::ostream& os, const char* name, const json& v) {
  os << "  " << name << " = " << num(v["at_point"]);
  if (v.contains("zero")) os << (v["zero"].get<bool>() ? "  [≡ 0]" : "  [≠ 0]");
  os << "\n";
}

void analyze_text(std::ostream& os, const json& r) {
  const json& s = r["settings"];
  os << "A = " << r["one_form"].get<std::string>() << "\n";
  os << "variables (" << list(r["variables"]) << "), " << num(s["samples"])
     << " samples, seed " << num(s["seed"]) << ", tolerance "
     << num(s["tol_abs"]) << " abs + " << num(s["tol_rel"]) << " rel\n\n";
  os << "Pfaff sequence\n";
  for (const json& e : r["pfaff"]["sequence"]) {
    os << "  " << e["label"].get<std::string>() << "  degree " << num(e["degree"])
       << "  " << (e["nonvanishing"].get<bool>() ? "nonvanishing" : "zero") << "  "
       << e["form"].get<std::string>() << "\n";
  }
  os << "Pfaff dimension " << num(r["pfaff"]["dimension"]) << " (pointwise:";
  for (const auto& [k, n] : r["pfaff"]["pointwise"].items()) os << " " << k << "×" << num(n);
  os << ")\n";
  if (!r["torsion"].is_null()) {
    os << "torsion T = (" << list(r["torsion"]["T"]) << ")\n";
    os << "        h = " << r["torsion"]["h"].get<std::string>() << "\n";
    os << "parity    = " << r["parity"].get<std::string>() << "\n";
  }
  os << "topology " << (r["connected"].get<bool>() ? "connected" : "disconnected") << "\n";
  if (!r["topology"].is_null()) {
    os << "\n";
    topology_text(os, r["topology"]);
  }
}

void physics_text(std::ostream& os, const json& r) {
  os << "point (" << list(r["point"]) << ")\n";
  if (!r["fluid"].is_null()) {
    const json& f = r["fluid"];
    os << "\nfluid (ν = " << num(f["nu"]) << ")\n";
    vec_text(os, "vorticity", f["vorticity"]);
    vec_text(os, "euler residual", f["euler_residual"]);
    vec_text(os, "helmholtz residual", f["helmholtz_residual"]);
    vec_text(os, "navier-stokes momentum", f["ns_residual"]["momentum"]);
    scalar_text(os, "div v", f["ns_residual"]["divergence"]);
    scalar_text(os, "parity −2ν ω·curl ω", f["parity"]);
    os << "  parity from F∧F = " << num(f["parity"]["from_forms_at_point"]) << "\n";
    scalar_text(os, "helicity h", f["helicity"]["h"]);
    vec_text(os, "helicity current T", f["helicity"]["T"]);
    scalar_text(os, "div T + ∂h/∂t", f["helicity"]["conservation"]);
    os << "  dH ≡ 0: " << yes_no(f["helicity"]["dH_zero"]) << "\n";
    os << "  process: " << f["process_class"].get<std::string>() << "\n";
  }
  if (!r["em"].is_null()) {
    const json& e = r["em"];
    os << "\nelectromagnetic\n";
    vec_text(os, "E", e["E"]);
    vec_text(os, "B", e["B"]);
    vec_text(os, "curl E + ∂B/∂t", e["faraday"]["curl_e_plus_db_dt"]);
    scalar_text(os, "div B", e["faraday"]["div_b"]);
    vec_text(os, "torsion T", e["torsion"]["T"]);
    scalar_text(os, "torsion h", e["torsion"]["h"]);
    scalar_text(os, "parity", e["parity"]);
    if (!e["master"].is_null()) {
      vec_text(os, "curl(E + V×B)", e["master"]["r1"]);
      vec_text(os, "∂(E + V×B)/∂t + grad(E·V)", e["master"]["r2"]);
      os << "  process: " << e["process_class"].get<std::string>() << "\n";
    }
  }
}

}  // namespace

std::string render_text(const json& r) {
  std::ostringstream os;
  const std::string command = r.value("command", "");
  if (r.value("status", "ok") != "ok") {
    os << command << ": " << r["status"].get<std::string>() << ": "
       << r["error"]["message"].get<std::string>() << "\n";
    return os.str();
  }
  for (const json& w : r["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
  if (command == "analyze") {
    analyze_text(os, r);
  } else if (command == "topology") {
    if (!r["pfaff_dimension"].is_null()) {
      os << "Pfaff dimension " << num(r["pfaff_dimension"]) << "\n";
    }
    topology_text(os, r["topology"]);
    if (!r["map_continuous"].is_null()) {
      os << "\nmap continuous: " << yes_no(r["map_continuous"]) << "\n";
    }
  } else if (command == "circulate") {
    os << "A = " << r["one_form"].get<std::string>() << "\n";
    for (const json& c : r["circulations"]) {
      os << "\ncurve " << num(c["curve"]) << ": Γ = " << num(c["value"])
         << "  (Γ/2π = " << num(c["over_two_pi"]) << ")\n";
      quadrature_text(os, c);
    }
  } else if (command == "link") {
    const json& l = r["linking"];
    os << "linking integral " << num(l["value"]) << "\n";
    os << "nearest integer  " << num(l["nearest_integer"]) << ", residual "
       << num(l["residual"]) << "\n";
    quadrature_text(os, l);
  } else if (command == "braid") {
    const json& b = r["braid"];
    os << "braid integral " << num(b["value"]) << " (E/c = " << num(b["E_over_c"]) << ")\n";
    os << "L1 mass        " << num(b["l1"]) << ", ratio " << num(b["relative"]) << "\n";
    quadrature_text(os, b);
  } else if (command == "physics") {
    physics_text(os, r);
  }
  return os.str();
}

}  // namespace cartan::cli
