#include "cartan_cli/app.hpp"

#include <fstream>
#include <iostream>

#ifdef CARTAN_CLI11_SINGLE_HEADER
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "cartan/error.hpp"

namespace cartan::cli {

namespace {

using nlohmann::json;

json error_report(const std::string& command, const char* status,
                  const char* kind, const std::string& message) {
  return {{"command", command},
          {"status", status},
          {"warnings", json::array()},
          {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

Outcome run(const std::string& command, const json& in, const Overrides& o) {
  try {
    json report;
    if (command == "analyze") {
      report = cmd_analyze(in, o);
    } else if (command == "topology") {
      report = cmd_topology(in, o);
    } else if (command == "circulate") {
      report = cmd_circulate(in, o);
    } else if (command == "link") {
      report = cmd_link(in, o);
    } else if (command == "braid") {
      report = cmd_braid(in, o);
    } else if (command == "physics") {
      report = cmd_physics(in, o);
    } else {
      return {kInputError, error_report(command, "input_error", "usage",
                                        "unknown command '" + command + "'")};
    }
    return {kOk, std::move(report)};
  } catch (const InconclusiveError& e) {
    json r = error_report(command, "inconclusive", "inconclusive", e.what());
    r["warnings"].push_back(e.what());
    return {kInconclusive, std::move(r)};
  } catch (const SingularityError& e) {
    json r = error_report(command, "singular", "singularity", e.what());
    r["error"]["where"] = e.where();
    return {kSingular, std::move(r)};
  } catch (const EvalError& e) {
    return {kSingular, error_report(command, "singular", "evaluation", e.what())};
  } catch (const InputError& e) {
    json r = error_report(command, "input_error", "input", e.what());
    r["error"]["path"] = e.path();
    return {kInputError, std::move(r)};
  } catch (const ContextError& e) {
    return {kInputError, error_report(command, "input_error", "context", e.what())};
  } catch (const json::exception& e) {
    return {kInputError, error_report(command, "input_error", "input", e.what())};
  }
}

std::string render_machine(const json& report) { return report.dump(2) + "\n"; }

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exterior differential systems: Pfaff analysis, Cartan "
               "topology, period integrals and field residuals."};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string format = "text";
  Overrides o;
  const std::vector<std::pair<const char*, const char*>> commands{
      {"analyze", "Pfaff sequence, torsion, parity and Cartan topology of a 1-form"},
      {"topology", "Cartan topology tables (full carrier by default)"},
      {"circulate", "Circulation of a 1-form around closed curves"},
      {"link", "Gauss linking number of the first two curves"},
      {"braid", "Triple braid integral of three momentum curves"},
      {"physics", "Electromagnetic and fluid residuals and diagnostics"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", input, "Input JSON file ('-' for stdin)");
    sub->add_option("--out", output, "Write the report here instead of stdout");
    sub->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--samples", o.samples, "Sample count override");
    sub->add_option("--seed", o.seed, "Sampling seed override");
    sub->add_option("--tol-abs", o.tol_abs, "Absolute zero-test tolerance");
    sub->add_option("--tol-rel", o.tol_rel, "Relative zero-test tolerance");
    sub->add_option("--panels", o.panels, "Quadrature panels per dimension");
    sub->add_option("--refine", o.refine, "Richardson refinement levels");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  json in = json::object();
  if (!input.empty()) {
    try {
      if (input == "-") {
        in = json::parse(std::cin);
      } else {
        std::ifstream f(input);
        if (!f) {
          err << "error: cannot open input file '" << input << "'\n";
          return kInputError;
        }
        in = json::parse(f);
      }
    } catch (const json::parse_error& e) {
      err << "error: " << input << ": " << e.what() << "\n";
      return kInputError;
    }
  } else if (command != "topology") {
    err << "error: " << command << " needs --input\n";
    return kInputError;
  }

  const Outcome result = run(command, in, o);
  if (result.exit_code != kOk) {
    err << "error: " << result.report["error"]["message"].get<std::string>() << "\n";
    if (format == "text") return result.exit_code;
  }
  const std::string text =
      format == "machine" ? render_machine(result.report) : render_text(result.report);
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    f << text;
    if (!f) {
      err << "error: cannot write '" << output << "'\n";
      return kInputError;
    }
  }
  return result.exit_code;
}

}  // namespace cartan::cli
