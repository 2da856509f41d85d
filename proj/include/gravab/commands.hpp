#pragma once

/**
 * @file commands.hpp
 * @brief Subcommand bodies for the gravab tool: each renders its result as
 * an aligned table, CSV, or JSON string.
 *
 * Tables and CSV open with '#' comment lines naming the formulas used and the
 * provenance of every parameter; JSON carries the same in "metadata". Output
 * is a pure function of the configuration unless timestamp is enabled.
 */

#include <string>

#include "gravab/run_config.hpp"

namespace gravab {

/// Axial table x, U, dU/dx, d²U/dx² and m U/ħ [rad/s] for the source masses.
std::string cmd_field(const ResolvedConfig& config);

/// Stationary points between the spheres, s, ΔU and ΔU/c².
std::string cmd_saddles(const ResolvedConfig& config);

/// Optimal L/R for the configured s and ρ.
std::string cmd_optimize(const ResolvedConfig& config);

/// The nine-row budget.
std::string cmd_budget(const ResolvedConfig& config);

/// Interferometer sequence with and without masses, optional T scan and
/// shaken arm.
std::string cmd_sequence(const ResolvedConfig& config);

}  // namespace gravab
