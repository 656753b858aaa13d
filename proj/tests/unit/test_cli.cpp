#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "twistor/cli.hpp"

using namespace twistor::cli;
namespace fs = std::filesystem;

namespace {

const char* kSmall = R"({"n": 2, "monopoles": [[0, [0, 0]], [0.3, [0.1, 0]]], "suites": ["all"], "samples": 200})";

std::string message_of(const std::string& text) {
  try {
    parse_config_text(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("twistor_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run(const std::string& args) {
  // the seed fallback must not leak in from the caller's environment
  const std::string cmd = std::string("env -u TWISTOR_DEGEN_SEED ") + TWISTOR_CLI_PATH + " " + args;
  const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::size_t line_count(const fs::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

}  // namespace

TEST_CASE("config parsing") {
  const RunConfig c = parse_config_text(kSmall);
  CHECK(c.n == 2);
  CHECK(c.monopoles.size() == 2);
  CHECK(c.samples == 200);
  CHECK(c.suites.size() == suite_names().size());
  CHECK(c.tolerances.size() == default_tolerances().size());
  CHECK(c.tolerances.at("round_trip") == 1e-7);

  CHECK(message_of("{").find("line") != std::string::npos);
  CHECK(message_of(R"({"n": 2, "bogus": 1})").find("bogus") != std::string::npos);
  CHECK(message_of(R"({"n": 1, "suites": ["nope"]})").find("identities") != std::string::npos);
  CHECK(message_of(R"({"samples": 5})").find("'n'") != std::string::npos);
  CHECK(message_of(R"({"n": 3, "monopoles": [[0, [0, 0]]]})").find("n") != std::string::npos);
  CHECK(message_of(R"({"n": 1, "tolerances": {"unit_c": -1}})").find("unit_c") != std::string::npos);
  CHECK(message_of(R"({"n": 1, "sweep": {"parameter": "q", "values": [1]}})").find("parameter") != std::string::npos);
  CHECK(message_of(R"({"$schema": "x", "description": "y", "n": 1, "suites": ["identities"]})").empty());

  RunConfig needs = parse_config_text(R"({"n": 1, "suites": ["hitchin"]})");
  CHECK_THROWS_AS(check_requirements(needs), ConfigError);
  CHECK_THROWS_AS(parse_config("/nonexistent/config.json"), IoError);
}

TEST_CASE("digest tracks configuration content") {
  const RunConfig a = parse_config_text(kSmall);
  RunConfig b = a;
  CHECK(config_digest(a) == config_digest(b));
  CHECK(config_digest(a).size() == 16);
  b.samples = 201;
  CHECK(config_digest(a) != config_digest(b));
}

TEST_CASE("reports are deterministic apart from timing") {
  RunConfig c = parse_config_text(kSmall);
  c.suites = expand_suites({"identities", "hyperbolic", "singularities"});
  const auto r1 = strip_timing(run_suites(c));
  const auto r2 = strip_timing(run_suites(c));
  CHECK(r1.dump() == r2.dump());
  CHECK(r1["status"] == "PASS");
  CHECK(r1["suites"].size() == 3);
  CHECK(r1["version"] == kVersion);
  CHECK(r1.dump().find("elapsed_ms") == std::string::npos);
}

TEST_CASE("a non-real override fails without crashing") {
  RunConfig c = parse_config_text(
      R"({"n": 2, "monopoles": [[0, [0, 0]], [0.3, [0.1, 0]]], "suites": ["singularities", "hyperbolic"],
          "samples": 100, "curve_overrides": [{"index": 1, "coeffs": [[1, 0], [0.3, 0], [0.5, 0], [1, 0]]}]})");
  const auto r = run_suites(c);
  CHECK(r["status"] == "FAIL");
  for (const auto& s : r["suites"]) {
    CHECK(s["status"] == "FAIL");
    CHECK_FALSE(s["diagnostics"].empty());
  }
}

TEST_CASE("cli exit codes and outputs") {
  const fs::path dir = scratch("exit");
  const fs::path good = dir / "good.json";
  std::ofstream(good) << kSmall;
  const fs::path bad = dir / "bad.json";
  std::ofstream(bad) << R"({"n": 1, "suites": ["nope"]})";
  const fs::path broken = dir / "broken.json";
  std::ofstream(broken)
      << R"({"n": 2, "monopoles": [[0, [0, 0]], [0.3, [0.1, 0]]], "suites": ["singularities"],
            "curve_overrides": [{"index": 1, "coeffs": [[1, 0], [0.3, 0], [0.5, 0], [1, 0]]}]})";

  CHECK(run("verify --config " + good.string() + " --suite identities --suite hyperbolic") == 0);
  CHECK(run("verify --config " + broken.string()) == 1);
  CHECK(run("verify --config " + bad.string()) == 2);
  CHECK(run("verify") == 2);
  CHECK(run("verify --config " + (dir / "missing.json").string()) == 3);
  CHECK(run("plot --config " + good.string() + " --out /proc/no_such_dir") == 3);

  const fs::path r1 = dir / "r1.json", r2 = dir / "r2.json";
  CHECK(run("verify --config " + good.string() + " --suite identities --seed 9 --report " + r1.string()) == 0);
  CHECK(run("verify --config " + good.string() + " --suite identities --seed 9 --report " + r2.string()) == 0);
  auto load = [](const fs::path& p) {
    std::ifstream in(p);
    return strip_timing(nlohmann::json::parse(in)).dump();
  };
  CHECK(load(r1) == load(r2));
  CHECK(nlohmann::json::parse(std::ifstream(r1))["seed"] == 9);

  // the environment supplies the seed when neither flag nor config does
  const fs::path r3 = dir / "r3.json";
  CHECK(run("verify --config " + good.string() + " --suite identities --report " + r3.string()) == 0);
  CHECK(nlohmann::json::parse(std::ifstream(r3))["seed"] == 42);
  const std::string env = "env TWISTOR_DEGEN_SEED=77 ";
  const int raw = std::system((env + TWISTOR_CLI_PATH + " verify --config " + good.string() +
                               " --suite identities --report " + r3.string() + " >/dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(raw) == 0);
  CHECK(nlohmann::json::parse(std::ifstream(r3))["seed"] == 77);

  const fs::path out = dir / "plots";
  CHECK(run("plot --config " + good.string() + " --out " + out.string()) == 0);
  CHECK(line_count(out / "lines.csv") == 1001);
  CHECK(line_count(out / "discriminant.csv") > 1);
  CHECK(line_count(out / "singular_points.csv") > 1);

  const fs::path sweep = dir / "sweep.json";
  std::ofstream(sweep) << R"({"n": 2, "monopoles": [[0, [0, 0]], [0.3, [0.1, 0]]],
                              "sweep": {"parameter": "s", "values": [1, 0.5, 0.1, 0]}})";
  CHECK(run("sweep --config " + sweep.string()) == 0);
}
