// gravab: field tables, saddle points, geometry optimum, phase budget and
// interferometer sequences for a pair of source spheres.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gravab/commands.hpp"
#include "gravab/error.hpp"

namespace {

using nlohmann::json;

void report_error(const std::string& code, const std::string& message) {
  json err{{"error", {{"code", code}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
}

json read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gravab::Error(gravab::ErrorCode::invalid_input, "cannot open config '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw gravab::Error(gravab::ErrorCode::invalid_input,
                        "config '" + path + "' is not valid JSON: " + e.what());
  }
}

json env_layer() {
  json env = json::object();
  if (const char* g = std::getenv("GRAVAB_G_EARTH"); g && *g) {
    char* end = nullptr;
    const double value = std::strtod(g, &end);
    if (end == g || *end != '\0') {
      throw gravab::Error(gravab::ErrorCode::invalid_input, "GRAVAB_G_EARTH is not a number");
    }
    env["g_earth"] = value;
  }
  return env;
}

// key=value, value parsed as JSON when it can be, else taken as a string.
void add_setting(json& overrides, const std::string& item) {
  const auto eq = item.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw gravab::Error(gravab::ErrorCode::invalid_input, "--set expects key=value, got '" + item + "'");
  }
  const std::string key = item.substr(0, eq);
  const std::string raw = item.substr(eq + 1);
  json value = json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;
  overrides[key] = value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gravab: gravitational Aharonov-Bohm phase toolkit"};
  app.require_subcommand(1);

  std::string config_path, output_path, format, species;
  double hold_time = 0.0;
  bool paper_baseline = false, timestamp = false;
  std::vector<std::string> settings;

  app.add_option("--config", config_path, "flat JSON config file");
  app.add_option("--output", output_path, "write output here instead of stdout");
  app.add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_flag("--paper-baseline", paper_baseline, "use the frozen baseline parameter set");
  app.add_option("--species", species, "atom species (Cs, Rb87, Sr88, Li7)");
  auto* t_opt = app.add_option("--T", hold_time, "hold time [s]");
  app.add_flag("--timestamp", timestamp, "add a UTC timestamp to the metadata");
  app.add_option("--set", settings, "override a config key, key=value")->take_all();

  struct Sub {
    const char* name;
    const char* help;
    std::string (*run)(const gravab::ResolvedConfig&);
  };
  const Sub subs[] = {
      {"field", "axial potential, gradient, curvature and phase rate", gravab::cmd_field},
      {"saddles", "stationary points and saddle potential difference", gravab::cmd_saddles},
      {"optimize", "sphere ratio maximizing the potential difference", gravab::cmd_optimize},
      {"budget", "phase budget", gravab::cmd_budget},
      {"sequence", "interferometer sequence with and without masses", gravab::cmd_sequence},
  };
  for (const auto& s : subs) app.add_subcommand(s.name, s.help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("invalid-input", e.what());
    return 2;
  }

  try {
    json file = json::object();
    if (!config_path.empty()) file = read_config_file(config_path);
    json overrides = json::object();
    for (const auto& item : settings) add_setting(overrides, item);
    if (!format.empty()) overrides["format"] = format;
    if (!output_path.empty()) overrides["output"] = output_path;
    if (!species.empty()) overrides["species"] = species;
    if (t_opt->count()) overrides["T_s"] = hold_time;
    if (timestamp) overrides["timestamp"] = true;

    const gravab::ResolvedConfig config =
        gravab::resolve_config(file, env_layer(), overrides, paper_baseline);

    std::string out;
    for (const auto& s : subs) {
      if (app.got_subcommand(s.name)) out = s.run(config);
    }
    if (config.output.empty()) {
      std::cout << out;
    } else {
      std::ofstream f(config.output, std::ios::binary);
      if (!f) throw gravab::Error(gravab::ErrorCode::invalid_input, "cannot write '" + config.output + "'");
      f << out;
    }
    return 0;
  } catch (const gravab::Error& e) {
    report_error(std::string(gravab::code_name(e.code())), e.what());
    return 1;
  } catch (const std::exception& e) {
    report_error("numerical-failure", e.what());
    return 1;
  }
}
