#pragma once

/**
 * @file constants.hpp
 * @brief CODATA-2018 physical constants and the atom species catalog.
 *
 * Everything here is SI. The only adjustable value is the local acceleration
 * of free fall, which callers pass explicitly where it matters.
 */

#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace gravab {

namespace constants {

/** G: Newtonian constant of gravitation [m³ kg⁻¹ s⁻²]. */
inline constexpr double G = 6.67430e-11;

/** c: speed of light in vacuum [m/s]. */
inline constexpr double c = 299'792'458.0;

/** h: Planck constant [J·s]. */
inline constexpr double h = 6.626'070'15e-34;

/** ħ: reduced Planck constant [J·s]. */
inline constexpr double hbar = h / (2.0 * std::numbers::pi);

/** a₀: Bohr radius [m]. */
inline constexpr double a_B = 5.291'772'109'03e-11;

/** u: atomic mass constant [kg]. */
inline constexpr double u = 1.660'539'066'60e-27;

/** Default local acceleration of free fall [m/s²]. */
inline constexpr double g_earth = 9.81;

}  // namespace constants

/// Snapshot of the constants in use; g_earth is the only field that varies.
struct PhysicalConstants {
  double G = constants::G;
  double c = constants::c;
  double hbar = constants::hbar;
  double h = constants::h;
  double a_B = constants::a_B;
  double g_earth = constants::g_earth;

  /// Throws invalid-input if any constant is non-positive or h != 2π·ħ.
  void validate() const;
};

struct AtomSpecies {
  std::string name;
  double mass = 0.0;               // [kg]
  double scattering_length = 0.0;  // [m]
};

/// ω_C = m c² / ħ [rad/s].
double compton_angular_frequency(const AtomSpecies& species);

/// Cs-133 with the Feshbach-enhanced scattering length 3000 a₀ used for the
/// mean-field estimate.
AtomSpecies cesium();

/// Known species by name (case-insensitive; "Cs", "cesium", "Rb87", ...).
/// Throws unknown-species.
AtomSpecies species_by_name(std::string_view name);

std::vector<std::string> species_names();

}  // namespace gravab
