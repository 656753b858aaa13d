#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "twistor/hyperbolic.hpp"

namespace twistor::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kPass = 0, kFail = 1, kConfigError = 2, kIoError = 3 };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepSpec {
  std::string parameter;  // "s" or "lambda"
  std::vector<double> values;
};

// Replaces curve `index` of the s = 1 model by arbitrary (possibly non-real) coefficients.
struct CurveOverride {
  int index = 0;
  OneOneCurve curve;
};

struct RunConfig {
  int n = 0;
  std::vector<MonopolePoint> monopoles;
  std::vector<std::string> suites;  // expanded, sorted, unique
  std::uint64_t seed = 42;
  bool seed_given = false;
  std::size_t samples = 1000;
  std::map<std::string, double> tolerances;  // every known key, defaults filled in
  std::optional<SweepSpec> sweep;
  std::vector<CurveOverride> curve_overrides;
};

const std::vector<std::string>& suite_names();
const std::map<std::string, double>& default_tolerances();

// Throws ConfigError with the offending line / field.
RunConfig parse_config_text(const std::string& text);
// Throws IoError when the file cannot be read, ConfigError otherwise.
RunConfig parse_config(const std::string& path);

// Expands "all" and validates names; throws ConfigError listing the valid names.
std::vector<std::string> expand_suites(const std::vector<std::string>& names);

// Checks suite prerequisites (monopoles for the suites that need them).
void check_requirements(const RunConfig& cfg);

nlohmann::json config_to_json(const RunConfig& cfg);
std::string config_digest(const RunConfig& cfg);

struct SuiteResult {
  std::string name;
  bool pass = true;
  double max_residual = 0.0;
  nlohmann::json counts = nlohmann::json::object();
  std::vector<std::string> diagnostics;
  double elapsed_ms = 0.0;
};

SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

// {version, seed, samples, config_digest, status, suites: [...]} ordered by suite name.
nlohmann::json run_suites(const RunConfig& cfg);

// One record per sweep value; status FAIL only when a valid value fails its checks.
nlohmann::json run_sweep(const RunConfig& cfg);

// lines.csv, discriminant.csv, singular_points.csv. Throws IoError when `dir` is unwritable.
void emit_plot_data(const RunConfig& cfg, const std::string& dir);

// Copy of a report with every "elapsed_ms" removed, for determinism comparisons.
nlohmann::json strip_timing(nlohmann::json report);

}  // namespace twistor::cli
