#pragma once

// wigner-nearest driver. The executable is a thin CLI11 wrapper around run();
// tests call run() and execute() directly.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wnear/error.hpp"
#include "wnear/grid.hpp"
#include "wnear/report.hpp"
#include "wnear/symbol.hpp"

namespace wnear::cli {

inline const std::vector<std::string> kCommands = {"closest", "radial", "dispersive", "schatten",
                                                   "gram-check"};

inline constexpr std::size_t kMaxGridAxis = 2048;

/// Bad configuration: `field` names the offending key (dotted path).
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& reason)
      : Error("cli", "invalid_config", field + ": " + reason), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct RunConfig {
  std::string command;
  json echo;  // the input document with every defaulted field filled in

  std::optional<SymbolSpec> symbol;
  std::optional<double> cubic_t;  // set for the cubic_wigner_approx builtin

  double epsilon = 1e-6;
  std::size_t N_max = 256;
  std::size_t q = 64;
  std::size_t radial_q = 32;
  std::size_t n_cap = 10000;
  std::optional<std::size_t> N;
  GridSpec grid;
  bool emit_grid = false;
  std::vector<double> schatten_q;
  std::size_t n_max = 8;
};

/// Validates `doc` for `command`. Relative grid paths resolve against base_dir.
RunConfig parse_config(const std::string& command, const json& doc,
                       const std::filesystem::path& base_dir = {});

SymbolSpec parse_symbol(const json& sym, const std::filesystem::path& base_dir,
                        std::optional<double>* cubic_t = nullptr);

struct Outcome {
  json result;
  std::optional<PhaseGrid> minimizer_grid;
  std::optional<PhaseGrid> input_grid;
};

Outcome execute(const RunConfig& cfg);

/// {"command", "config_echo", "result", "timings_ms", "version"}
json make_report(const RunConfig& cfg, const Outcome& out, const json& timings);

struct Invocation {
  std::string command;
  std::string config_path;  // "-" reads stdin
  std::filesystem::path output_dir = ".";
  std::optional<std::size_t> threads;
  std::optional<std::string> kernel;
  bool timings = false;
};

/// Full run: read config, execute, write report.json and the optional CSV
/// grids. On failure prints {"error": {...}} to `err` and returns nonzero
/// (2 for configuration errors, 1 for pipeline errors).
int run(const Invocation& inv, std::istream& in, std::ostream& err);

json error_json(const std::exception& e);

}  // namespace wnear::cli
