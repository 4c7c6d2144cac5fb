#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "cartan/error.hpp"

namespace cartan::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInconclusive = 2,
  kSingular = 3,
};

/// Malformed or inconsistent input file. `path` names the offending field
/// ("curves[1].period").
class InputError : public Error {
 public:
  InputError(std::string path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Command-line overrides applied on top of the input file.
struct Overrides {
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol_abs;
  std::optional<double> tol_rel;
  std::optional<std::size_t> panels;
  std::optional<std::size_t> refine;
};

struct Outcome {
  int exit_code = kOk;
  nlohmann::json report;
};

/// Runs one subcommand on a parsed input document. Library errors
/// propagate; `run` maps them to exit codes.
nlohmann::json cmd_analyze(const nlohmann::json& in, const Overrides& o);
nlohmann::json cmd_topology(const nlohmann::json& in, const Overrides& o);
nlohmann::json cmd_circulate(const nlohmann::json& in, const Overrides& o);
nlohmann::json cmd_link(const nlohmann::json& in, const Overrides& o);
nlohmann::json cmd_braid(const nlohmann::json& in, const Overrides& o);
nlohmann::json cmd_physics(const nlohmann::json& in, const Overrides& o);

/// Dispatches `command`, catching library errors into an error report.
Outcome run(const std::string& command, const nlohmann::json& in,
            const Overrides& o);

/// Human-readable rendering of a report produced by `run`.
std::string render_text(const nlohmann::json& report);
/// Stable machine-readable rendering (sorted keys, two-space indent).
std::string render_machine(const nlohmann::json& report);

/// Full command-line entry point.
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

}  // namespace cartan::cli
