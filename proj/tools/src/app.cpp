#include "ssrbell_cli/app.hpp"

#include "ssrbell_cli/scenarios.hpp"
#include "ssrbell_cli/spec_json.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

namespace ssrbell::cli {

namespace {

struct Options {
  std::vector<std::string> targets;
  std::string scenario_flag;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> restarts;
  std::optional<std::size_t> samples;
  std::string format = "json";
  std::string out_path;
  std::string spec_path;
  std::string config_path;
  bool timing = false;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("SSRBELL_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("SSRBELL_SEED is not an unsigned integer: ") + env);
  }
}

nlohmann::json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  try {
    nlohmann::json j;
    in >> j;
    if (!j.is_object()) throw std::invalid_argument("config file must hold a JSON object");
    return j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("config file " + path + " is not valid JSON: " + e.what());
  }
}

template <typename T>
void read_field(const nlohmann::json& j, const char* key, T& target) {
  if (!j.contains(key)) return;
  try {
    target = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("config field '") + key + "' has the wrong type");
  }
}

// Precedence: command-line flag > config file > SSRBELL_SEED (seed only) > built-in default.
ScenarioConfig base_config(const Options& o, const nlohmann::json& file) {
  ScenarioConfig c;
  c.seed = seed_from_env(c.seed);
  read_field(file, "seed", c.seed);
  read_field(file, "restarts", c.restarts);
  read_field(file, "samples", c.samples);
  read_field(file, "random_specs", c.random_specs);
  read_field(file, "max_particles", c.max_particles);
  read_field(file, "sweep_points", c.sweep_points);
  if (o.seed) c.seed = *o.seed;
  return c;
}

ScenarioConfig scenario_config(const ScenarioConfig& base, const Options& o,
                               const nlohmann::json& file, const std::string& name) {
  ScenarioConfig c = base;
  if (file.contains("scenarios") && file["scenarios"].contains(name)) {
    const auto& s = file["scenarios"][name];
    read_field(s, "restarts", c.restarts);
    read_field(s, "samples", c.samples);
    read_field(s, "random_specs", c.random_specs);
    read_field(s, "max_particles", c.max_particles);
    read_field(s, "sweep_points", c.sweep_points);
  }
  if (o.restarts) c.restarts = *o.restarts;
  if (o.samples) c.samples = *o.samples;
  if (c.restarts == 0) throw std::invalid_argument("restarts must be positive");
  if (c.samples == 0) throw std::invalid_argument("samples must be positive");
  return c;
}

std::vector<std::string> resolve_targets(const Options& o) {
  std::vector<std::string> requested = o.targets;
  if (!o.scenario_flag.empty()) requested.push_back(o.scenario_flag);
  if (requested.empty()) throw std::invalid_argument("no scenario given (try 'run all')");
  std::vector<std::string> out;
  for (const auto& name : requested) {
    if (name == "all") {
      out.insert(out.end(), scenario_names().begin(), scenario_names().end());
    } else if (is_scenario(name)) {
      out.push_back(name);
    } else {
      throw std::invalid_argument("unknown scenario '" + name + "'");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int execute_run(const Options& o, std::ostream& out, std::ostream& err) {
  const OutputFormat format = parse_format(o.format);
  const nlohmann::json file = o.config_path.empty() ? nlohmann::json::object() : load_config(o.config_path);
  const ScenarioConfig base = base_config(o, file);
  const auto targets = resolve_targets(o);

  std::optional<std::vector<SeparableSpec>> specs;
  if (!o.spec_path.empty()) {
    if (!std::ifstream(o.spec_path)) throw IoError("cannot open spec file " + o.spec_path);
    specs = load_specs(o.spec_path);
  }

  std::vector<ScenarioReport> reports;
  for (const auto& name : targets) {
    ScenarioConfig c = scenario_config(base, o, file, name);
    if (name == "separable-random") c.specs = specs;
    reports.push_back(run_scenario(name, c));
  }

  const std::string text = emit(reports, {format, o.timing, base.seed});
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) throw IoError("cannot write " + o.out_path);
  }

  bool ok = true;
  for (const auto& r : reports) {
    for (const auto& v : r.verdicts) {
      if (v.passed) continue;
      ok = false;
      err << "FAILED " << r.scenario << ": " << v.name << " (" << v.detail << ")\n";
    }
  }
  return ok ? kOk : kVerdictFailure;
}

}  // namespace

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bell nonlocality of mode-entangled states under particle-number superselection", "ssrbell"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "Run scenarios and emit a report");
  run->add_option("scenarios", o.targets, "Scenario names or 'all'");
  run->add_option("--scenario", o.scenario_flag, "Scenario name (alternative to the positional)");
  run->add_option("--seed", o.seed, "Global seed (default 42, or SSRBELL_SEED)");
  run->add_option("--restarts", o.restarts, "See-saw restarts per maximization");
  run->add_option("--samples", o.samples, "Phase-twirl samples");
  run->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  run->add_option("--out", o.out_path, "Write the report to this file instead of stdout");
  run->add_option("--spec", o.spec_path, "JSON separable spec(s) for separable-random");
  run->add_option("--config", o.config_path, "JSON config with defaults and per-scenario overrides");
  run->add_flag("--timing", o.timing, "Include runtime_ms in json/csv output");

  auto* list = app.add_subcommand("list", "List scenario names");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();  // shows the selected subcommand's help when there is one
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (app.got_subcommand(list)) {
    for (const auto& name : scenario_names()) out << name << "\n";
    return kOk;
  }
  try {
    return execute_run(o, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace ssrbell::cli
