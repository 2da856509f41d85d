#include "gravab/units.hpp"

#include <array>
#include <string>

#include "gravab/error.hpp"

namespace gravab {

namespace {

// value[base] = value[unit] / divisor. Divisors are exact powers of ten, so
// each direction is a single correctly rounded operation.
struct UnitDef {
  std::string_view unit;
  std::string_view base;
  double divisor;  // > 1 means the unit is smaller than its base
  bool multiply;   // true: value[base] = value[unit] * divisor
};

constexpr std::array<UnitDef, 9> kUnits{{
    {"cm", "m", 100.0, false},
    {"mm", "m", 1000.0, false},
    {"um", "m", 1e6, false},
    {"μm", "m", 1e6, false},
    {"nm", "m", 1e9, false},
    {"g/cm3", "kg/m3", 1000.0, true},
    {"cm-3", "m-3", 1e6, true},
    {"mG", "G", 1000.0, false},
    {"kHz", "Hz", 1000.0, true},
}};

const UnitDef* find_unit(std::string_view unit) {
  for (const auto& def : kUnits) {
    if (def.unit == unit) return &def;
  }
  return nullptr;
}

bool is_base(std::string_view unit) {
  for (const auto& def : kUnits) {
    if (def.base == unit) return true;
  }
  return false;
}

double to_base(double value, const UnitDef& def) {
  return def.multiply ? value * def.divisor : value / def.divisor;
}

double from_base(double value, const UnitDef& def) {
  return def.multiply ? value / def.divisor : value * def.divisor;
}

[[noreturn]] void unsupported(std::string_view from, std::string_view to) {
  throw Error(ErrorCode::unsupported_unit,
              "unsupported unit conversion '" + std::string(from) + "' -> '" +
                  std::string(to) + "'");
}

}  // namespace

double convert_units(double value, std::string_view from_unit, std::string_view to_unit) {
  const UnitDef* from = find_unit(from_unit);
  const UnitDef* to = find_unit(to_unit);
  const bool from_base_unit = is_base(from_unit);
  const bool to_base_unit = is_base(to_unit);

  if (from_unit == to_unit && (from || from_base_unit)) return value;
  if (from && to_base_unit && from->base == to_unit) return to_base(value, *from);
  if (to && from_base_unit && to->base == from_unit) return from_base(value, *to);
  unsupported(from_unit, to_unit);
}

}  // namespace gravab
