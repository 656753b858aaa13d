// twistor_degen: verification suites, parameter sweeps and plot data for LeBrun twistor
// space degenerations.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "twistor/cli.hpp"

namespace tc = twistor::cli;

namespace {

std::uint64_t resolve_seed(const tc::RunConfig& cfg, const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (cfg.seed_given) return cfg.seed;
  if (const char* env = std::getenv("TWISTOR_DEGEN_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw tc::ConfigError(std::string("TWISTOR_DEGEN_SEED is not an integer: '") + env + "'");
    }
  }
  return 42;
}

void write_json(const nlohmann::json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw tc::IoError("cannot write report '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw tc::IoError("write failed for '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for degenerations of LeBrun twistor spaces"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> suites;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::string report_path;
  std::string out_dir;

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--config", config_path, "config JSON")->required();
  verify->add_option("--suite", suites, "suite name (repeatable); overrides the config");
  verify->add_option("--seed", seed, "seed; falls back to the config, then TWISTOR_DEGEN_SEED");
  verify->add_option("--samples", samples, "samples per property");
  verify->add_option("--report", report_path, "write the report here instead of stdout");

  auto* sweep = app.add_subcommand("sweep", "run the s or lambda sweep of the config");
  sweep->add_option("--config", config_path, "config JSON")->required();
  sweep->add_option("--seed", seed, "seed");
  sweep->add_option("--report", report_path, "write the report here instead of stdout");

  auto* plot = app.add_subcommand("plot", "write CSV plot data");
  plot->add_option("--config", config_path, "config JSON")->required();
  plot->add_option("--out", out_dir, "output directory")->required();
  plot->add_option("--seed", seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return tc::kConfigError;
  }

  try {
    tc::RunConfig cfg = tc::parse_config(config_path);
    cfg.seed = resolve_seed(cfg, seed);
    if (!suites.empty()) cfg.suites = tc::expand_suites(suites);
    if (samples) {
      if (*samples == 0) throw tc::ConfigError("--samples must be positive");
      cfg.samples = *samples;
    }

    if (verify->parsed()) {
      tc::check_requirements(cfg);
      const auto report = tc::run_suites(cfg);
      write_json(report, report_path);
      return report["status"] == "PASS" ? tc::kPass : tc::kFail;
    }
    if (sweep->parsed()) {
      const auto report = tc::run_sweep(cfg);
      write_json(report, report_path);
      return report["status"] == "PASS" ? tc::kPass : tc::kFail;
    }
    tc::emit_plot_data(cfg, out_dir);
    return tc::kPass;
  } catch (const tc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return tc::kConfigError;
  } catch (const tc::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return tc::kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return tc::kFail;
  }
}
