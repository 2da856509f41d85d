#include "gravab/run_config.hpp"

#include <algorithm>
#include <numbers>
#include <set>

#include "gravab/error.hpp"
#include "gravab/geomopt.hpp"
#include "gravab/units.hpp"

namespace gravab {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Keys whose defaults are the baseline experiment parameters.
const std::set<std::string> kBaselineKeys{
    "L_cm",     "R_cm",          "rho_g_cm3", "s_cm",      "species",        "T_s",
    "V0_kHz",   "wavelength_nm", "waist_mm",  "waist_offset_mm", "n_cm3",    "dn_over_n",
    "scattering_length_aB", "delta_B_mG", "zeeman_Hz_per_G2", "radial_trap_Hz", "g_earth",
    "shake_amplitude_um", "shake_frequency_kHz", "shake_duration_s"};

[[noreturn]] void bad(const std::string& message) {
  throw Error(ErrorCode::invalid_input, message);
}

double number(const json& v, const std::string& key) {
  if (!v.is_number()) bad("config key '" + key + "' must be a number");
  return v.get<double>();
}

bool boolean(const json& v, const std::string& key) {
  if (!v.is_boolean()) bad("config key '" + key + "' must be true or false");
  return v.get<bool>();
}

std::string text(const json& v, const std::string& key) {
  if (!v.is_string()) bad("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

ordered_json default_config_values() {
  return ordered_json{
      {"geometry", "fixed"},
      {"layout", "pair"},
      {"L_cm", 3.0},
      {"R_cm", 1.0},
      {"rho_g_cm3", 10.0},
      {"s_cm", 1.38},
      {"species", "Cs"},
      {"T_s", 1.0},
      {"V0_kHz", 100.0},
      {"wavelength_nm", 852.0},
      {"waist_mm", 0.5},
      {"waist_offset_mm", 1.0},
      {"n_cm3", 2.0e9},
      {"dn_over_n", 0.016},
      {"scattering_length_aB", 3000.0},
      {"delta_B_mG", 1.0},
      {"zeeman_Hz_per_G2", 430.0},
      {"radial_trap_Hz", 0.1},
      {"g_earth", constants::g_earth},
      {"transport_s", 0.1},
      {"mass_mode", "interval"},
      {"mass_ramp_s", 0.0},
      {"include_earth", false},
      {"shake", false},
      {"shake_amplitude_um", 0.1},
      {"shake_frequency_kHz", 1.0},
      {"shake_duration_s", 1.0},
      {"x_min_cm", nullptr},
      {"x_max_cm", nullptr},
      {"samples", 501},
      {"scan_T_s", json::array()},
      {"format", "table"},
      {"output", ""},
      {"timestamp", false},
  };
}

ResolvedConfig resolve_config(const json& file_values, const json& env_values,
                              const json& overrides, bool paper_baseline) {
  ordered_json merged = default_config_values();
  std::vector<std::pair<std::string, std::string>> provenance;
  for (const auto& [key, value] : merged.items()) {
    provenance.emplace_back(key, kBaselineKeys.count(key) ? "baseline" : "default");
  }

  auto apply = [&](const json& layer, const char* source) {
    if (layer.is_null()) return;
    if (!layer.is_object()) bad("configuration must be a flat JSON object");
    for (const auto& [key, value] : layer.items()) {
      if (!merged.contains(key)) bad("unknown config key '" + key + "'");
      if (value.is_object()) bad("config key '" + key + "' must not be an object");
      merged[key] = value;
      for (auto& [k, src] : provenance) {
        if (k == key) src = source;
      }
    }
  };

  if (paper_baseline && !file_values.is_null() && !file_values.empty()) {
    bad("--paper-baseline cannot be combined with a config file");
  }
  apply(file_values, "config");
  apply(env_values, "env");
  apply(overrides, "flag");

  ResolvedConfig rc;
  rc.provenance = std::move(provenance);

  rc.geometry = text(merged["geometry"], "geometry");
  if (rc.geometry != "fixed" && rc.geometry != "optimize") {
    bad("geometry must be 'fixed' or 'optimize'");
  }
  rc.layout = text(merged["layout"], "layout");
  if (rc.layout != "pair" && rc.layout != "single") bad("layout must be 'pair' or 'single'");

  rc.L = convert_units(number(merged["L_cm"], "L_cm"), "cm", "m");
  rc.R = convert_units(number(merged["R_cm"], "R_cm"), "cm", "m");
  rc.density = convert_units(number(merged["rho_g_cm3"], "rho_g_cm3"), "g/cm3", "kg/m3");
  rc.s = convert_units(number(merged["s_cm"], "s_cm"), "cm", "m");
  if (rc.geometry == "optimize") {
    const GeometryResult g = optimize_geometry(rc.s, rc.density);
    rc.L = g.L;
    rc.R = g.R;
  }

  const json& sp = merged["species"];
  if (sp.is_string() && !sp.get<std::string>().empty()) {
    rc.species = species_by_name(sp.get<std::string>());
  } else if (!sp.is_null() && !sp.is_string()) {
    bad("species must be a name or null");
  }
  if (rc.species) {
    const bool species_overridden = std::any_of(
        rc.provenance.begin(), rc.provenance.end(),
        [](const auto& p) { return p.first == "species" && p.second != "baseline"; });
    const bool a_given = std::any_of(rc.provenance.begin(), rc.provenance.end(), [](const auto& p) {
      return p.first == "scattering_length_aB" && p.second != "baseline";
    });
    if (a_given || !species_overridden) {
      rc.species->scattering_length =
          number(merged["scattering_length_aB"], "scattering_length_aB") * constants::a_B;
    }
  }

  rc.T = number(merged["T_s"], "T_s");
  rc.lattice.depth = constants::h * convert_units(number(merged["V0_kHz"], "V0_kHz"), "kHz", "Hz");
  rc.lattice.wavelength =
      convert_units(number(merged["wavelength_nm"], "wavelength_nm"), "nm", "m");
  rc.lattice.waist = convert_units(number(merged["waist_mm"], "waist_mm"), "mm", "m");
  rc.lattice.waist_offset =
      convert_units(number(merged["waist_offset_mm"], "waist_offset_mm"), "mm", "m");
  rc.cloud.density = convert_units(number(merged["n_cm3"], "n_cm3"), "cm-3", "m-3");
  rc.cloud.density_asymmetry = number(merged["dn_over_n"], "dn_over_n");
  rc.magnetic.field_difference =
      convert_units(number(merged["delta_B_mG"], "delta_B_mG"), "mG", "G");
  rc.magnetic.quadratic_coefficient = number(merged["zeeman_Hz_per_G2"], "zeeman_Hz_per_G2");
  rc.radial_trap_frequency = kTwoPi * number(merged["radial_trap_Hz"], "radial_trap_Hz");
  rc.g_earth = number(merged["g_earth"], "g_earth");
  if (!(rc.g_earth > 0.0)) bad("g_earth must be positive");

  rc.transport_time = number(merged["transport_s"], "transport_s");
  const std::string mode = text(merged["mass_mode"], "mass_mode");
  if (mode == "interval") {
    rc.mass_mode = MassSchedule::Mode::interval;
  } else if (mode == "always_on") {
    rc.mass_mode = MassSchedule::Mode::always_on;
  } else {
    bad("mass_mode must be 'interval' or 'always_on'");
  }
  rc.mass_ramp = number(merged["mass_ramp_s"], "mass_ramp_s");
  rc.include_earth = boolean(merged["include_earth"], "include_earth");
  rc.shake = boolean(merged["shake"], "shake");
  rc.shaking.amplitude =
      convert_units(number(merged["shake_amplitude_um"], "shake_amplitude_um"), "um", "m");
  rc.shaking.angular_frequency =
      kTwoPi *
      convert_units(number(merged["shake_frequency_kHz"], "shake_frequency_kHz"), "kHz", "Hz");
  rc.shaking.duration = number(merged["shake_duration_s"], "shake_duration_s");

  if (!merged["x_min_cm"].is_null()) {
    rc.x_min = convert_units(number(merged["x_min_cm"], "x_min_cm"), "cm", "m");
  }
  if (!merged["x_max_cm"].is_null()) {
    rc.x_max = convert_units(number(merged["x_max_cm"], "x_max_cm"), "cm", "m");
  }
  const json& samples = merged["samples"];
  if (!samples.is_number_integer()) bad("samples must be an integer");
  rc.samples = samples.get<int>();

  const json& scan = merged["scan_T_s"];
  if (!scan.is_array()) bad("scan_T_s must be an array of hold times");
  for (const auto& v : scan) rc.scan_T.push_back(number(v, "scan_T_s"));

  rc.format = text(merged["format"], "format");
  rc.output = text(merged["output"], "output");
  rc.timestamp = boolean(merged["timestamp"], "timestamp");
  rc.values = std::move(merged);
  return rc;
}

std::vector<std::string> ResolvedConfig::fallbacks() const {
  std::vector<std::string> out;
  for (const auto& [key, source] : provenance) {
    if (source == "baseline") out.push_back(key);
  }
  return out;
}

const AtomSpecies& ResolvedConfig::require_species() const {
  if (!species) {
    throw Error(ErrorCode::incomplete_baseline, "no atom species configured");
  }
  return *species;
}

SourceConfiguration ResolvedConfig::sources() const {
  if (layout == "single") {
    return SourceConfiguration({SphereSource{Vec3::Zero(), R, density}});
  }
  return SourceConfiguration::symmetric_pair(L, R, density);
}

BudgetParams ResolvedConfig::budget_params() const {
  BudgetParams p;
  p.sphere_radius = R;
  p.sphere_density = density;
  p.sphere_separation = L;
  p.arm_separation = s;
  p.species = species;
  p.hold_time = T;
  p.lattice = lattice;
  p.cloud = cloud;
  p.magnetic = magnetic;
  p.radial_trap_frequency = radial_trap_frequency;
  p.g_earth = g_earth;
  p.shaking = shaking;
  return p;
}

}  // namespace gravab
