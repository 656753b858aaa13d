#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "twistor/cli.hpp"
#include "twistor/sampling.hpp"

namespace twistor::cli {

using nlohmann::json;

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"degeneration", "hitchin",       "hyperbolic",
                                              "identities",   "singularities", "twistor-lines"};
  return names;
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> tol{
      {"identity", 1e-9},      // relative residual of exact identities
      {"round_trip", 1e-7},    // Hausdorff distance of recovered lines
      {"unit_c", 1e-8},        // ||c| - 1| of recovered phases
      {"real_point", 0.05},    // lower bound for the no-real-point distance
      {"l_infinity", 1e-3},    // lower bound for the distance of lines to L_infinity
      {"disjoint", 1e-6},      // lower bound for distinct-line distances
      {"phi", 1e-12},          // phi round trip
      {"reproduce", 1e-14},    // member_fiber_model(s = 1) against the input curves
      {"invariance", 1e-10},   // real structure lifts
      {"conjugacy", 1e-12},    // intersection conjugacy
      {"convergence", 0.2},    // sweep: s -> 0 intersection convergence
  };
  return tol;
}

namespace {

std::string list_suites() {
  std::string out = "all";
  for (const auto& s : suite_names()) out += ", " + s;
  return out;
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ConfigError("config field '" + field + "': " + what);
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) field_error(field, "expected a number");
  return j.get<double>();
}

Complex complex_pair(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) field_error(field, "expected [re, im]");
  return {number(j[0], field + "[0]"), number(j[1], field + "[1]")};
}

}  // namespace

std::vector<std::string> expand_suites(const std::vector<std::string>& names) {
  std::set<std::string> out;
  for (const auto& name : names) {
    if (name == "all") {
      out.insert(suite_names().begin(), suite_names().end());
    } else if (std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end()) {
      out.insert(name);
    } else {
      throw ConfigError("unknown suite '" + name + "'; valid suites: " + list_suites());
    }
  }
  return {out.begin(), out.end()};
}

RunConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << "config is not valid JSON (line " << line << ", column " << col << "): " << e.what();
    throw ConfigError(os.str());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  static const std::set<std::string> known{"$schema",   "description", "n",
                                           "monopoles", "suites",      "seed",
                                           "samples",   "tolerances",  "sweep",
                                           "curve_overrides"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) field_error(key, "unknown key");
  }

  RunConfig cfg;
  if (!j.contains("n")) field_error("n", "missing");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) {
    field_error("n", "expected a positive integer");
  }
  cfg.n = j["n"].get<int>();

  if (j.contains("monopoles")) {
    const auto& ms = j["monopoles"];
    if (!ms.is_array()) field_error("monopoles", "expected an array of [b, [re, im]]");
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const std::string f = "monopoles[" + std::to_string(i) + "]";
      if (!ms[i].is_array() || ms[i].size() != 2) field_error(f, "expected [b, [re, im]]");
      cfg.monopoles.push_back({number(ms[i][0], f + "[0]"), complex_pair(ms[i][1], f + "[1]")});
    }
    if (static_cast<int>(cfg.monopoles.size()) != cfg.n) {
      field_error("monopoles", "n = " + std::to_string(cfg.n) + " but " +
                                   std::to_string(cfg.monopoles.size()) + " monopoles given");
    }
  }

  std::vector<std::string> suites{"all"};
  if (j.contains("suites")) {
    const auto& s = j["suites"];
    if (!s.is_array() || s.empty()) field_error("suites", "expected a non-empty array of names");
    suites.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!s[i].is_string()) field_error("suites[" + std::to_string(i) + "]", "expected a string");
      suites.push_back(s[i].get<std::string>());
    }
  }
  cfg.suites = expand_suites(suites);

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) field_error("seed", "expected a non-negative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
    cfg.seed_given = true;
  }
  if (j.contains("samples")) {
    if (!j["samples"].is_number_unsigned() || j["samples"].get<std::uint64_t>() == 0) {
      field_error("samples", "expected a positive integer");
    }
    cfg.samples = j["samples"].get<std::size_t>();
  }

  cfg.tolerances = default_tolerances();
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    if (!t.is_object()) field_error("tolerances", "expected an object");
    for (const auto& [key, value] : t.items()) {
      if (!cfg.tolerances.count(key)) field_error("tolerances." + key, "unknown tolerance");
      const double v = number(value, "tolerances." + key);
      if (!(v > 0.0)) field_error("tolerances." + key, "must be positive");
      cfg.tolerances[key] = v;
    }
  }

  if (j.contains("sweep")) {
    const auto& s = j["sweep"];
    if (!s.is_object()) field_error("sweep", "expected {parameter, values}");
    SweepSpec spec;
    if (!s.contains("parameter") || !s["parameter"].is_string()) {
      field_error("sweep.parameter", "expected \"s\" or \"lambda\"");
    }
    spec.parameter = s["parameter"].get<std::string>();
    if (spec.parameter != "s" && spec.parameter != "lambda") {
      field_error("sweep.parameter", "expected \"s\" or \"lambda\"");
    }
    if (!s.contains("values") || !s["values"].is_array() || s["values"].empty()) {
      field_error("sweep.values", "expected a non-empty array of numbers");
    }
    for (std::size_t i = 0; i < s["values"].size(); ++i) {
      spec.values.push_back(number(s["values"][i], "sweep.values[" + std::to_string(i) + "]"));
    }
    for (const auto& [key, value] : s.items()) {
      if (key != "parameter" && key != "values") field_error("sweep." + key, "unknown key");
    }
    cfg.sweep = spec;
  }

  if (j.contains("curve_overrides")) {
    const auto& o = j["curve_overrides"];
    if (!o.is_array()) field_error("curve_overrides", "expected an array");
    for (std::size_t i = 0; i < o.size(); ++i) {
      const std::string f = "curve_overrides[" + std::to_string(i) + "]";
      if (!o[i].is_object() || !o[i].contains("index") || !o[i].contains("coeffs")) {
        field_error(f, "expected {index, coeffs}");
      }
      if (!o[i]["index"].is_number_integer()) field_error(f + ".index", "expected an integer");
      const int index = o[i]["index"].get<int>();
      if (index < 0 || index >= cfg.n) field_error(f + ".index", "out of range [0, n)");
      const auto& c = o[i]["coeffs"];
      if (!c.is_array() || c.size() != 4) field_error(f + ".coeffs", "expected four [re, im] pairs");
      CurveOverride ov;
      ov.index = index;
      ov.curve = {complex_pair(c[0], f + ".coeffs[0]"), complex_pair(c[1], f + ".coeffs[1]"),
                  complex_pair(c[2], f + ".coeffs[2]"), complex_pair(c[3], f + ".coeffs[3]")};
      if (ov.curve.scale() == 0.0) field_error(f + ".coeffs", "all coefficients vanish");
      cfg.curve_overrides.push_back(ov);
    }
  }
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config_text(os.str());
}

void check_requirements(const RunConfig& cfg) {
  static const std::set<std::string> need_monopoles{"degeneration", "hitchin", "singularities"};
  for (const auto& s : cfg.suites) {
    if (need_monopoles.count(s) && cfg.monopoles.empty()) {
      field_error("monopoles", "missing; required by suite '" + s + "'");
    }
  }
}

json config_to_json(const RunConfig& cfg) {
  json j;
  j["n"] = cfg.n;
  j["monopoles"] = json::array();
  for (const auto& m : cfg.monopoles) {
    j["monopoles"].push_back({m.b, {m.c.real(), m.c.imag()}});
  }
  j["suites"] = cfg.suites;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["tolerances"] = cfg.tolerances;
  if (cfg.sweep) j["sweep"] = {{"parameter", cfg.sweep->parameter}, {"values", cfg.sweep->values}};
  j["curve_overrides"] = json::array();
  for (const auto& o : cfg.curve_overrides) {
    json coeffs = json::array();
    for (Complex z : {o.curve.a, o.curve.b, o.curve.c, o.curve.d}) {
      coeffs.push_back({z.real(), z.imag()});
    }
    j["curve_overrides"].push_back({{"index", o.index}, {"coeffs", coeffs}});
  }
  return j;
}

std::string config_digest(const RunConfig& cfg) {
  std::ostringstream os;
  os << std::hex << fnv1a64(config_to_json(cfg).dump());
  std::string hex = os.str();
  return std::string(16 - hex.size(), '0') + hex;
}

json strip_timing(json report) {
  if (report.is_object()) {
    report.erase("elapsed_ms");
    for (auto& [key, value] : report.items()) value = strip_timing(value);
  } else if (report.is_array()) {
    for (auto& value : report) value = strip_timing(value);
  }
  return report;
}

}  // namespace twistor::cli
