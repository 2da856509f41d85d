#include "gravab/constants.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include "gravab/error.hpp"

namespace gravab {

namespace {

struct CatalogEntry {
  std::string_view canonical;
  std::array<std::string_view, 3> aliases;
  double mass_u;
  double scattering_length_a0;
};

// Atomic masses from AME2016; scattering lengths are representative values.
// Cs carries the Feshbach-tuned 3000 a0 assumed for the mean-field row.
constexpr std::array<CatalogEntry, 4> kCatalog{{
    {"Cs133", {"cs", "cesium", "caesium"}, 132.905451961, 3000.0},
    {"Rb87", {"rb", "rubidium", "rubidium87"}, 86.909180527, 100.4},
    {"Sr88", {"sr", "strontium", "strontium88"}, 87.9056122571, -2.0},
    {"Li7", {"li", "lithium", "lithium7"}, 7.0160034366, -27.6},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

AtomSpecies make_species(const CatalogEntry& entry) {
  return AtomSpecies{std::string(entry.canonical), entry.mass_u * constants::u,
                     entry.scattering_length_a0 * constants::a_B};
}

}  // namespace

void PhysicalConstants::validate() const {
  if (!(G > 0 && c > 0 && hbar > 0 && h > 0 && a_B > 0 && g_earth > 0)) {
    throw Error(ErrorCode::invalid_input, "physical constants must be strictly positive");
  }
  if (std::abs(h - 2.0 * std::numbers::pi * hbar) > 4.0 * 2.2e-16 * h) {
    throw Error(ErrorCode::invalid_input, "h and hbar are inconsistent");
  }
}

double compton_angular_frequency(const AtomSpecies& species) {
  if (!(species.mass > 0.0)) {
    throw Error(ErrorCode::invalid_input,
                "species '" + species.name + "' must have positive mass");
  }
  return species.mass * constants::c * constants::c / constants::hbar;
}

AtomSpecies cesium() { return make_species(kCatalog[0]); }

AtomSpecies species_by_name(std::string_view name) {
  const std::string key = lower(name);
  for (const auto& entry : kCatalog) {
    if (key == lower(entry.canonical) ||
        std::find(entry.aliases.begin(), entry.aliases.end(), key) != entry.aliases.end()) {
      return make_species(entry);
    }
  }
  throw Error(ErrorCode::unknown_species, "unknown species '" + std::string(name) + "'");
}

std::vector<std::string> species_names() {
  std::vector<std::string> names;
  for (const auto& entry : kCatalog) names.emplace_back(entry.canonical);
  return names;
}

}  // namespace gravab
