#pragma once

/**
 * @file run_config.hpp
 * @brief Flat JSON run configuration for the command-line tool.
 *
 * Keys carry their ingestion unit in the name (L_cm, V0_kHz, n_cm3, ...);
 * values are converted to SI once, here. Anything not supplied falls back to
 * the experiment baseline (or a tool default) and is listed in fallbacks().
 *
 * Precedence, lowest to highest: defaults, config file, GRAVAB_G_EARTH,
 * command-line overrides.
 */

#include <json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gravab/budget.hpp"
#include "gravab/gravfield.hpp"
#include "gravab/sequence.hpp"

namespace gravab {

struct ResolvedConfig {
  std::string geometry = "fixed";  // "fixed" or "optimize"
  std::string layout = "pair";     // "pair" or "single"
  double L = 0.0, R = 0.0, density = 0.0, s = 0.0;
  std::optional<AtomSpecies> species;
  double T = 0.0;
  LatticeParams lattice;
  CloudParams cloud;
  MagneticParams magnetic;
  double radial_trap_frequency = 0.0;  // [rad/s]
  double g_earth = 0.0;
  double transport_time = 0.0;
  MassSchedule::Mode mass_mode = MassSchedule::Mode::interval;
  double mass_ramp = 0.0;
  bool include_earth = false;
  bool shake = false;
  ShakingParams shaking;
  std::optional<double> x_min, x_max;  // [m]
  int samples = 0;
  std::vector<double> scan_T;
  std::string format = "table";
  std::string output;
  bool timestamp = false;

  /// Merged values in ingestion units, echoed into output headers.
  nlohmann::ordered_json values;

  /// (key, source) for every key; source is one of baseline, default,
  /// config, env, flag.
  std::vector<std::pair<std::string, std::string>> provenance;

  /// Keys that fell back to the experiment baseline.
  std::vector<std::string> fallbacks() const;

  /// Throws incomplete-baseline when the species was explicitly unset.
  const AtomSpecies& require_species() const;

  SourceConfiguration sources() const;
  BudgetParams budget_params() const;
};

/// Defaults in ingestion units; the experiment baseline plus tool settings.
nlohmann::ordered_json default_config_values();

/// Resolves a config. file_values and overrides must be flat JSON objects;
/// unknown keys throw invalid-input. When paper_baseline is set, file_values
/// must be empty.
ResolvedConfig resolve_config(const nlohmann::json& file_values, const nlohmann::json& env_values,
                              const nlohmann::json& overrides, bool paper_baseline = false);

}  // namespace gravab
